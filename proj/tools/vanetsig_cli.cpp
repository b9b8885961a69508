// Command-line front end: one subcommand per lifecycle phase, plain
// text key files, binary signature/proof blobs.  Exit codes: 0 success,
// 1 verification failure, 2 input/usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vanetsig/batch.hpp"
#include "vanetsig/ibgs.hpp"
#include "vanetsig/opener.hpp"
#include "vanetsig/pipeline.hpp"
#include "vanetsig/scenario.hpp"
#include "vanetsig/scheduler.hpp"

using namespace vanetsig;

namespace {

// --- tiny persistence layer: "name value" lines, value may hold spaces

using KvPairs = std::vector<std::pair<std::string, std::string>>;

void write_kv(const std::string& path, const KvPairs& kv) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    for (const auto& [k, v] : kv) out << k << ' ' << v << '\n';
}

std::map<std::string, std::string> read_kv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos)
            throw std::invalid_argument(path + ": malformed line: " + line);
        kv[line.substr(0, sp)] = line.substr(sp + 1);
    }
    return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key,
                        const std::string& path) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument(path + ": missing field " + key);
    return it->second;
}

Bytes read_blob(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream body;
    body << in.rdbuf();
    std::string s = body.str();
    return Bytes(s.begin(), s.end());
}

void write_blob(const std::string& path, BytesView data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

std::string hex(BytesView b) { return to_hex(b); }

// --- key material files -------------------------------------------------

std::string params_path(const std::string& dir) { return dir + "/params.txt"; }
std::string tea_path(const std::string& dir) { return dir + "/tea.txt"; }
std::string registry_path(const std::string& dir) { return dir + "/registry.txt"; }

SystemParams load_params(const std::string& dir) {
    auto kv = read_kv(params_path(dir));
    GroupContext ctx = context_from_descriptor(need(kv, "context", params_path(dir)));
    SystemParams p;
    p.ctx = ctx;
    p.A1 = ctx.parse_g1(from_hex(need(kv, "A1", params_path(dir))));
    p.A2 = ctx.parse_g1(from_hex(need(kv, "A2", params_path(dir))));
    p.A3 = ctx.parse_g1(from_hex(need(kv, "A3", params_path(dir))));
    p.A4 = ctx.parse_g1(from_hex(need(kv, "A4", params_path(dir))));
    p.A5 = ctx.parse_g1(from_hex(need(kv, "A5", params_path(dir))));
    p.K_T = ctx.parse_g2(from_hex(need(kv, "K_T", params_path(dir))));
    return p;
}

TeaSecret load_tea(const SystemParams& p, const std::string& dir) {
    auto kv = read_kv(tea_path(dir));
    return TeaSecret{p.ctx.parse_scalar(from_hex(need(kv, "x_T", tea_path(dir))))};
}

GmKey load_gm(const SystemParams& p, const std::string& dir, const std::string& id) {
    std::string path = dir + "/gm-" + id + ".txt";
    auto kv = read_kv(path);
    GmKey gm;
    gm.id_R = need(kv, "id", path);
    gm.C = p.ctx.parse_g2(from_hex(need(kv, "C", path)));
    gm.x_R = p.ctx.parse_scalar(from_hex(need(kv, "x_R", path)));
    return gm;
}

OpenerKey load_tsd(const SystemParams& p, const std::string& dir, const std::string& id) {
    std::string path = dir + "/tsd-" + id + ".txt";
    auto kv = read_kv(path);
    return OpenerKey{need(kv, "id", path), p.ctx.parse_g1(from_hex(need(kv, "x_O", path)))};
}

VehicleKey load_vehicle(const SystemParams& p, const std::string& dir, const std::string& id) {
    std::string path = dir + "/veh-" + id + ".txt";
    auto kv = read_kv(path);
    return VehicleKey{need(kv, "id", path), p.ctx.parse_g1(from_hex(need(kv, "x_V", path)))};
}

VehicleCredential load_cred(const SystemParams& p, const std::string& dir,
                            const std::string& id) {
    std::string path = dir + "/cred-" + id + ".txt";
    auto kv = read_kv(path);
    VehicleCredential cred;
    cred.key.id_V = need(kv, "id", path);
    cred.key.x_V = p.ctx.parse_g1(from_hex(need(kv, "x_V", path)));
    cred.D = p.ctx.parse_g1(from_hex(need(kv, "D", path)));
    cred.t = p.ctx.parse_scalar(from_hex(need(kv, "t", path)));
    cred.C = p.ctx.parse_g2(from_hex(need(kv, "C", path)));
    return cred;
}

GroupContext backend_context(const std::string& backend, std::uint64_t seed) {
    if (backend == "transparent") return make_transparent_context(seed);
    if (backend == "curve") return make_curve_context("ss512");
    return make_curve_context(backend);  // ss256 | ss512
}

// --- shared option bag --------------------------------------------------

struct Opts {
    std::string dir = ".";
    std::string backend = "transparent";
    std::uint64_t seed = 1;
    int l = 20;
    std::string batch_size = "auto";
    bool audit = false;
    std::string out;
    std::string scenario;

    std::string kind, id, gm_id = "gm-1", opener_id = "tsd-1", vehicle_id;
    std::string msg, sig_path, proof_path, list_path, jobs_path, order;
    std::string form = "modified";
    bool select = false;
    bool filter_infeasible = false;
    bool measured = false;
    bool bench_individual = false;
    long long budget = 0;
    long long handoff = 0;
};

std::size_t parse_batch_size(const std::string& text) {
    if (text == "auto") return 0;
    std::size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size() || v == 0)
        throw std::invalid_argument("--batch-size wants a positive integer or 'auto'");
    return static_cast<std::size_t>(v);
}

// --- subcommand bodies (return the process exit code) -------------------

int run_setup(const Opts& o) {
    GroupContext ctx = backend_context(o.backend, o.seed);
    Rng rng(o.seed);
    auto [params, tea] = setup(ctx, rng);
    write_kv(params_path(o.dir), {{"context", ctx.descriptor()},
                                  {"A1", hex(params.A1.serialize())},
                                  {"A2", hex(params.A2.serialize())},
                                  {"A3", hex(params.A3.serialize())},
                                  {"A4", hex(params.A4.serialize())},
                                  {"A5", hex(params.A5.serialize())},
                                  {"K_T", hex(params.K_T.serialize())}});
    write_kv(tea_path(o.dir), {{"x_T", hex(tea.x_T.serialize())}});
    std::cout << "wrote " << params_path(o.dir) << " and " << tea_path(o.dir) << '\n';
    return 0;
}

int run_keygen(const Opts& o) {
    SystemParams params = load_params(o.dir);
    TeaSecret tea = load_tea(params, o.dir);
    Rng rng(o.seed);
    if (o.kind == "gm") {
        GmKey gm = keygen_gm(params, tea, o.id, rng);
        std::string path = o.dir + "/gm-" + o.id + ".txt";
        write_kv(path, {{"id", gm.id_R},
                        {"C", hex(gm.C.serialize())},
                        {"x_R", hex(gm.x_R.serialize())}});
        std::cout << "wrote " << path << '\n';
    } else if (o.kind == "tsd") {
        OpenerKey op = keygen_tsd(params, tea, o.id);
        std::string path = o.dir + "/tsd-" + o.id + ".txt";
        write_kv(path, {{"id", op.id_O}, {"x_O", hex(op.x_O.serialize())}});
        std::cout << "wrote " << path << '\n';
    } else if (o.kind == "vehicle") {
        VehicleKey vk = keygen_vehicle(params, tea, o.id);
        std::string path = o.dir + "/veh-" + o.id + ".txt";
        write_kv(path, {{"id", vk.id_V}, {"x_V", hex(vk.x_V.serialize())}});
        std::cout << "wrote " << path << '\n';
    } else {
        throw std::invalid_argument("--kind must be gm, tsd, or vehicle");
    }
    return 0;
}

int run_join(const Opts& o) {
    SystemParams params = load_params(o.dir);
    GmKey gm = load_gm(params, o.dir, o.gm_id);
    VehicleKey vk = load_vehicle(params, o.dir, o.vehicle_id);
    Rng rng(o.seed);
    PoKTranscript pok = pok_prove(params, vk, as_bytes("join-" + vk.id_V), rng);
    auto [cert, record] = join_issue(gm, params, vk.id_V, pok, rng);
    if (!join_verify(params, vk.id_V, cert.D, cert.t, cert.C, gm.id_R))
        throw std::runtime_error("issued certificate failed the vehicle-side check");
    std::string path = o.dir + "/cred-" + o.vehicle_id + ".txt";
    write_kv(path, {{"id", vk.id_V},
                    {"x_V", hex(vk.x_V.serialize())},
                    {"D", hex(cert.D.serialize())},
                    {"t", hex(cert.t.serialize())},
                    {"C", hex(cert.C.serialize())}});
    RegistrationTable::append_record(registry_path(o.dir), record);
    std::cout << "wrote " << path << " and registered with the opener\n";
    return 0;
}

int run_sign(const Opts& o) {
    SystemParams params = load_params(o.dir);
    VehicleCredential cred = load_cred(params, o.dir, o.vehicle_id);
    Rng rng(o.seed);
    Signature sig = sign(params, cred, o.opener_id, o.gm_id, o.msg, rng);
    Bytes wire = o.form == "full" ? serialize_signature(sig)
                                  : serialize_signature(to_modified(sig));
    write_blob(o.out, wire);
    std::cout << "wrote " << o.out << " (" << wire.size() << " bytes, " << o.form << " form)\n";
    return 0;
}

int run_verify(const Opts& o) {
    SystemParams params = load_params(o.dir);
    Bytes wire = read_blob(o.sig_path);
    if (wire.size() < 2) throw std::invalid_argument("signature blob too short");
    bool ok;
    if (wire[1] == 0x00) {
        Signature sig = parse_full_signature(params, wire, o.gm_id);
        ok = verify_individual_original(params, sig, o.msg, o.opener_id, o.gm_id);
    } else {
        ModifiedSignature sig = parse_modified_signature(params.ctx, wire);
        ok = verify_individual_modified(params, sig, o.msg, o.opener_id, o.gm_id);
    }
    std::cout << (ok ? "accept" : "reject") << '\n';
    return ok ? 0 : 1;
}

int run_batch(const Opts& o) {
    SystemParams params = load_params(o.dir);
    std::ifstream in(o.list_path);
    if (!in) throw std::invalid_argument("cannot read " + o.list_path);

    // each line: <signature-file> <group-id> <message...>
    std::vector<SignedMessage> msgs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string sig_file, id_R;
        if (!(fields >> sig_file >> id_R))
            throw std::invalid_argument(o.list_path + " line " + std::to_string(lineno) +
                                        ": want \"sigfile group-id message\"");
        std::string msg;
        std::getline(fields, msg);
        if (!msg.empty() && msg[0] == ' ') msg.erase(0, 1);
        SignedMessage sm;
        sm.sig = parse_modified_signature(params.ctx, read_blob(sig_file));
        sm.msg = msg;
        sm.id_R = id_R;
        msgs.push_back(std::move(sm));
    }

    BatchPolicy policy;
    policy.l = o.l;
    std::size_t b = parse_batch_size(o.batch_size);
    if (b > 0) policy.max_batch = b;
    Rng rng(o.seed);
    params.ctx.reset_pairing_count();
    std::vector<Verdict> verdicts = verify_batch(params, msgs, policy, o.opener_id, rng);
    bool all_ok = true;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        std::cout << i + 1 << ": " << (verdicts[i].accepted ? "accept" : "reject") << " ("
                  << to_string(verdicts[i].reason) << ")\n";
        all_ok = all_ok && verdicts[i].accepted;
    }
    std::cout << "pairings " << params.ctx.pairing_count() << '\n';
    return all_ok ? 0 : 1;
}

int run_open(const Opts& o) {
    SystemParams params = load_params(o.dir);
    OpenerKey opener = load_tsd(params, o.dir, o.opener_id);
    RegistrationTable table = RegistrationTable::load(params.ctx, registry_path(o.dir));
    Bytes wire = read_blob(o.sig_path);
    if (wire.size() < 2) throw std::invalid_argument("signature blob too short");
    Rng rng(o.seed);
    OpenResult result;
    if (wire[1] == 0x00) {
        Signature sig = parse_full_signature(params, wire, o.gm_id);
        result = open(params, opener, sig, o.msg, o.gm_id, table, rng);
    } else {
        ModifiedSignature sig = parse_modified_signature(params.ctx, wire);
        result = open(params, opener, sig, o.msg, o.gm_id, table, rng);
    }
    if (result.status != OpenStatus::ok) {
        std::cout << to_string(result.status) << '\n';
        return 1;
    }
    std::cout << "signer " << result.id_V << '\n';
    if (!o.out.empty()) {
        write_blob(o.out, serialize_proof(result.proof));
        std::cout << "wrote " << o.out << '\n';
    }
    return 0;
}

int run_judge(const Opts& o) {
    SystemParams params = load_params(o.dir);
    OpeningProof proof = parse_proof(params.ctx, read_blob(o.proof_path));
    Bytes wire = read_blob(o.sig_path);
    if (wire.size() < 2) throw std::invalid_argument("signature blob too short");
    bool ok;
    if (wire[1] == 0x00) {
        Signature sig = parse_full_signature(params, wire, o.gm_id);
        ok = judge(params, proof, sig, o.id, o.opener_id);
    } else {
        ModifiedSignature sig = parse_modified_signature(params.ctx, wire);
        ok = judge(params, proof, sig, o.id, o.opener_id);
    }
    std::cout << (ok ? "valid" : "invalid") << '\n';
    return ok ? 0 : 1;
}

int run_schedule(const Opts& o) {
    std::vector<Job> jobs = load_jobs(o.jobs_path);
    std::ostringstream table;
    if (o.select) {
        DpResult res = dp_max_weight(jobs, o.filter_infeasible);
        table << "id,start,C,L,U\n";
        for (const ScheduledJob& row : res.schedule.jobs)
            table << row.id << ',' << row.start << ',' << row.C << ',' << row.L << ',' << row.U
                  << '\n';
        table << "weight " << res.weight << "\nC_max " << res.schedule.C_max << "\nL_max "
              << res.schedule.L_max << '\n';
    } else {
        std::vector<int> order;
        if (o.order.empty()) {
            for (const Job& j : jobs) order.push_back(j.id);  // file order
        } else {
            std::istringstream in(o.order);
            std::string tok;
            while (std::getline(in, tok, ',')) order.push_back(std::stoi(tok));
        }
        ScheduleResult res = schedule_metrics(jobs, order);
        table << "id,start,C,L,U\n";
        for (const ScheduledJob& row : res.jobs)
            table << row.id << ',' << row.start << ',' << row.C << ',' << row.L << ',' << row.U
                  << '\n';
        table << "C_max " << res.C_max << "\nL_max " << res.L_max << "\non_time_weight "
              << res.on_time_weight << '\n';
    }
    if (o.out.empty()) {
        std::cout << table.str();
    } else {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + o.out);
        out << table.str();
        std::cout << "wrote " << o.out << '\n';
    }
    return 0;
}

int run_sweep(const Opts& o) {
    ScenarioConfig config = load_scenario_config(o.scenario);
    Scenario sc = gen_scenario(config, o.seed);

    GroupContext ctx = backend_context(config.backend, config.seed);
    Rng rng(config.seed);
    auto [params, tea] = setup(ctx, rng);
    OpenerKey opener = keygen_tsd(params, tea, "tsd-1");
    GmKey gm = keygen_gm(params, tea, sc.group_ids.at(0), rng);
    G2Elem S = group_value_S(params, gm.C, gm.id_R);

    // sign and precompute the first group's window, then sweep it
    std::vector<TimedItem> items;
    for (const ArrivalEvent& ev : sc.events) {
        if (ev.group != 0 || items.size() >= config.max_batch) continue;
        VehicleKey vk = keygen_vehicle(params, tea, sc.vehicle_ids[ev.vehicle]);
        PoKTranscript pok = pok_prove(params, vk, as_bytes("join"), rng);
        auto [cert, rec] = join_issue(gm, params, vk.id_V, pok, rng);
        VehicleCredential cred{std::move(vk), cert.D, cert.t, cert.C};
        ModifiedSignature sig =
            to_modified(sign(params, cred, opener.id_O, gm.id_R, ev.message, rng));
        if (ev.forged) sig.z2 = sig.z2 + ctx.scalar(1);
        TimedItem ti;
        ti.item = precompute_item(params, sig, ev.message, draw_delta(ctx, config.l, rng), S,
                                  opener.id_O);
        if (!ti.item.hash_ok) continue;
        ti.C = ev.tick;
        ti.d = ev.due;
        items.push_back(std::move(ti));
    }
    if (items.size() < 2) throw std::invalid_argument("scenario yields fewer than 2 usable items");

    SweepCostModel model;
    model.measured = o.measured;
    long long s_b = o.handoff > 0 ? o.handoff : items.back().C;
    auto records = batch_size_sweep(params, items, S, s_b, model);
    std::string csv = sweep_csv(records);
    if (o.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + o.out);
        out << csv;
        std::cout << "wrote " << o.out << '\n';
    }
    BatchChoice choice = choose_batch_size(records, o.budget);
    std::cout << "chosen_b " << choice.b << (choice.feasible ? "" : " (budget infeasible)")
              << '\n';
    for (const BatchSizeRecord& r : records)
        if (!r.ok) return 1;  // a forged item surfaced during the sweep
    return 0;
}

int run_bench(const Opts& o) {
    ScenarioConfig config = load_scenario_config(o.scenario);
    Scenario sc = gen_scenario(config, o.seed);
    PipelineOptions opt;
    opt.batch_size = parse_batch_size(o.batch_size);
    opt.lateness_budget = o.budget;
    opt.audit = o.audit;
    opt.bench_individual = o.bench_individual;
    BenchReport rep = run_pipeline(sc, opt);
    if (o.out.empty()) {
        std::cout << report_csv(rep);
    } else {
        emit_report(rep, o.out);
        std::cout << "wrote " << o.out << '\n';
    }
    if (opt.audit) std::cout << "audit_mismatches " << rep.audit_mismatches << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"identity-based group signatures with batch verification"};
    app.require_subcommand(1);
    Opts o;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--dir", o.dir, "key material directory");
        cmd->add_option("--seed", o.seed, "deterministic seed");
    };

    CLI::App* setup_cmd = app.add_subcommand("setup", "create system parameters");
    add_common(setup_cmd);
    setup_cmd->add_option("--backend", o.backend, "transparent | curve | ss256 | ss512");
    setup_cmd->callback([&] { exit_code = run_setup(o); });

    CLI::App* keygen_cmd = app.add_subcommand("keygen", "derive an authority or vehicle key");
    add_common(keygen_cmd);
    keygen_cmd->add_option("--kind", o.kind, "gm | tsd | vehicle")->required();
    keygen_cmd->add_option("--id", o.id, "identity string")->required();
    keygen_cmd->callback([&] { exit_code = run_keygen(o); });

    CLI::App* join_cmd = app.add_subcommand("join", "enroll a vehicle with a group manager");
    add_common(join_cmd);
    join_cmd->add_option("--vehicle", o.vehicle_id, "vehicle id")->required();
    join_cmd->add_option("--gm", o.gm_id, "group manager id");
    join_cmd->callback([&] { exit_code = run_join(o); });

    CLI::App* sign_cmd = app.add_subcommand("sign", "sign a message");
    add_common(sign_cmd);
    sign_cmd->add_option("--vehicle", o.vehicle_id, "vehicle id (cred-<id>.txt)")->required();
    sign_cmd->add_option("--gm", o.gm_id, "group manager id");
    sign_cmd->add_option("--opener", o.opener_id, "opener id");
    sign_cmd->add_option("--msg", o.msg, "message body")->required();
    sign_cmd->add_option("--form", o.form, "modified | full");
    sign_cmd->add_option("--out", o.out, "signature file")->required();
    sign_cmd->callback([&] { exit_code = run_sign(o); });

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify one signature");
    add_common(verify_cmd);
    verify_cmd->add_option("--sig", o.sig_path, "signature file")->required();
    verify_cmd->add_option("--msg", o.msg, "message body")->required();
    verify_cmd->add_option("--gm", o.gm_id, "group manager id");
    verify_cmd->add_option("--opener", o.opener_id, "opener id");
    verify_cmd->callback([&] { exit_code = run_verify(o); });

    CLI::App* batch_cmd = app.add_subcommand("batch", "batch-verify a list of signatures");
    add_common(batch_cmd);
    batch_cmd->add_option("--list", o.list_path, "file of: sigfile group-id message")->required();
    batch_cmd->add_option("--opener", o.opener_id, "opener id");
    batch_cmd->add_option("--l", o.l, "small-exponent bits");
    batch_cmd->add_option("--batch-size", o.batch_size, "N or auto");
    batch_cmd->callback([&] { exit_code = run_batch(o); });

    CLI::App* open_cmd = app.add_subcommand("open", "reveal the signer of a signature");
    add_common(open_cmd);
    open_cmd->add_option("--sig", o.sig_path, "signature file")->required();
    open_cmd->add_option("--msg", o.msg, "message body")->required();
    open_cmd->add_option("--gm", o.gm_id, "group manager id");
    open_cmd->add_option("--opener", o.opener_id, "opener id");
    open_cmd->add_option("--out", o.out, "opening proof file");
    open_cmd->callback([&] { exit_code = run_open(o); });

    CLI::App* judge_cmd = app.add_subcommand("judge", "check an opening proof");
    add_common(judge_cmd);
    judge_cmd->add_option("--sig", o.sig_path, "signature file")->required();
    judge_cmd->add_option("--proof", o.proof_path, "opening proof file")->required();
    judge_cmd->add_option("--id", o.id, "claimed signer id")->required();
    judge_cmd->add_option("--gm", o.gm_id, "group manager id");
    judge_cmd->add_option("--opener", o.opener_id, "opener id");
    judge_cmd->callback([&] { exit_code = run_judge(o); });

    CLI::App* sched_cmd = app.add_subcommand("schedule", "score or optimize a job list");
    sched_cmd->add_option("--jobs", o.jobs_path, "job file: id r d p [w]")->required();
    sched_cmd->add_option("--order", o.order, "comma-separated ids (metrics mode)");
    sched_cmd->add_flag("--select", o.select, "pick a max-weight on-time subset");
    sched_cmd->add_flag("--filter-infeasible", o.filter_infeasible,
                        "drop jobs that can never be on time");
    sched_cmd->add_option("--out", o.out, "write the table here instead of stdout");
    sched_cmd->callback([&] { exit_code = run_schedule(o); });

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "batch-size sweep over a scenario");
    sweep_cmd->add_option("--scenario", o.scenario, "scenario config")->required();
    sweep_cmd->add_option("--seed", o.seed, "stream seed");
    sweep_cmd->add_option("--budget", o.budget, "max-lateness budget for the pick");
    sweep_cmd->add_option("--handoff", o.handoff, "verification start tick (default: last arrival)");
    sweep_cmd->add_flag("--measured", o.measured, "measure wall time instead of the synthetic clock");
    sweep_cmd->add_option("--out", o.out, "CSV output path");
    sweep_cmd->callback([&] { exit_code = run_sweep(o); });

    CLI::App* bench_cmd = app.add_subcommand("bench", "run the two-stage pipeline");
    bench_cmd->add_option("--scenario", o.scenario, "scenario config")->required();
    bench_cmd->add_option("--seed", o.seed, "stream seed");
    bench_cmd->add_option("--batch-size", o.batch_size, "N or auto");
    bench_cmd->add_flag("--audit", o.audit, "cross-check against individual verification");
    bench_cmd->add_flag("--individual", o.bench_individual, "also time the individual modes");
    bench_cmd->add_option("--budget", o.budget, "lateness budget for auto sizing");
    bench_cmd->add_option("--out", o.out, "report CSV path");
    bench_cmd->callback([&] { exit_code = run_bench(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
