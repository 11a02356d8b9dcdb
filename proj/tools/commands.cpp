#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "c3rigid/certify.hpp"
#include "c3rigid/error.hpp"
#include "c3rigid/frame.hpp"
#include "c3rigid/graph_io.hpp"
#include "c3rigid/realization.hpp"
#include "c3rigid/report.hpp"
#include "c3rigid/sparsity.hpp"
#include "c3rigid/tree_partition.hpp"
#include "svg.hpp"

namespace c3rigid::cli {

namespace {

using nlohmann::json;

int diagnose(std::string_view command, const Error& e, std::ostream& err) {
    err << "c3rigid " << command << ": " << e.what() << "\n";
    return e.code() == ErrorCode::NotIsostatic ? kNegative : kFailure;
}

void emit(const json& report, const std::string& summary, const Options& opt, std::ostream& out) {
    if (opt.json)
        out << dump(report);
    else
        out << summary << "\n";
}

struct Certificate {
    ConstructionSequence sequence;
    ReplayResult replay;
    bool round_trip = false;
    TreePartition partition;  // input labels
    PartitionReport checks;
};

Certificate certify(const SymGraph& sg) {
    Certificate c;
    c.sequence = extract_sequence(sg);
    c.replay = replay_sequence(c.sequence);
    c.round_trip = equal_under_relabeling(c.replay.graph, sg, c.sequence.relabel);
    c.partition = relabel_partition(build_tree_partition(c.sequence), c.sequence.relabel);
    c.checks = verify_tree_partition(sg, c.partition);
    return c;
}

void require_free_action(const SymGraph& sg) {
    require_c3(sg);
    const C3Action& gamma = sg.action();
    for (Vertex v = 0; v < sg.graph().vertex_count(); ++v)
        if (gamma.fixes(v))
            throw Error(ErrorCode::FixedVertexPresent, "vertex " + std::to_string(v) + " is fixed by gamma");
}

}  // namespace

int run_check(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const SymGraph sg = parse_graph(document);
        json r = report_header("check", document);
        const SparsityReport sparsity = pebble_sparsity(sg.graph());
        r["sparsity"] = to_json(sparsity);
        bool isostatic = sparsity.is_tight;
        if (sg.has_action()) {
            const C3Verdict verdict = check_c3_isostatic(sg);
            r["fixed"] = to_json(verdict.fixed);
            r["verdict"] = to_json(verdict);
            isostatic = verdict.isostatic;
        }
        r["isostatic"] = isostatic;
        emit(r, isostatic ? "isostatic" : "not isostatic", opt, out);
        return isostatic ? kOk : kNegative;
    } catch (const Error& e) {
        return diagnose("check", e, err);
    }
}

int run_certify(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const SymGraph sg = parse_graph(document);
        json r = report_header("certify", document);
        const C3Verdict verdict = check_c3_isostatic(sg);
        r["verdict"] = to_json(verdict);
        if (!verdict.isostatic) {
            r["error"] = "NotIsostatic";
            emit(r, "not isostatic", opt, out);
            return diagnose("certify", Error(ErrorCode::NotIsostatic, "graph is not (C3,Phi)-isostatic"), err);
        }
        const Certificate c = certify(sg);
        r["sequence"] = to_json(c.sequence);
        r["replay"] = to_json(c.replay);
        r["replay"]["round_trip"] = c.round_trip;
        r["partition"] = to_json(c.partition);
        r["partition_checks"] = to_json(c.checks);
        const bool ok = c.round_trip && c.checks.all_passed();
        r["certified"] = ok;
        emit(r, std::to_string(c.sequence.moves.size()) + " moves, partition " + (ok ? "verified" : "FAILED"), opt,
             out);
        if (!ok) err << "c3rigid certify: certificate failed its own verification\n";
        return ok ? kOk : kFailure;
    } catch (const Error& e) {
        return diagnose("certify", e, err);
    }
}

int run_realize(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const SymGraph sg = parse_graph(document);
        json r = report_header("realize", document);
        r["method"] = opt.method;
        r["seed"] = opt.seed;
        require_free_action(sg);
        Placement placement;
        if (opt.method == "generic") {
            placement = symmetric_generic_positions(sg, opt.seed);
        } else if (opt.method == "frame") {
            if (!check_c3_isostatic(sg).isostatic)
                throw Error(ErrorCode::NotIsostatic, "frame method needs a (C3,Phi)-isostatic graph");
            const Certificate c = certify(sg);
            const Frame frame = frame_from_partition(sg, c.partition);
            const PullApartResult pulled = pull_apart_all(sg, c.partition, frame);
            r["partition"] = to_json(c.partition);
            r["frame"] = to_json(frame);
            r["frame_rank"] = pulled.initial_rank;
            json rounds = json::array();
            for (const PullApartRound& round : pulled.rounds) rounds.push_back(to_json(round));
            r["pull_apart"] = rounds;
            placement = framework_from_frame(sg, pulled.frame);
        } else {
            throw Error(ErrorCode::SchemaError, "unknown method '" + opt.method + "' (generic|frame)");
        }
        const IsostaticVerdict verdict = numeric_isostatic_check(sg, placement);
        r["placement"] = to_json(placement);
        r["symmetric"] = is_c3_symmetric(sg, placement.positions);
        r["verdict"] = to_json(verdict);
        emit(r, std::string(verdict.isostatic ? "isostatic" : "not isostatic") + ", rank " + std::to_string(verdict.rank),
             opt, out);
        return verdict.isostatic ? kOk : kNegative;
    } catch (const Error& e) {
        return diagnose("realize", e, err);
    }
}

int run_oracle(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        const SymGraph sg = parse_graph(document);
        json r = report_header("oracle", document);
        const bool brute = brute_force_laman(sg.graph());
        const bool pebble = laman_check(sg.graph());
        r["brute_force"] = brute;
        r["pebble_game"] = pebble;
        r["agree"] = brute == pebble;
        emit(r, brute == pebble ? "agree" : "DISAGREE", opt, out);
        return brute == pebble ? kOk : kNegative;
    } catch (const Error& e) {
        return diagnose("oracle", e, err);
    }
}

int run_render(std::string_view document, const Options& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.out.empty()) throw Error(ErrorCode::IoError, "render needs --out <path.svg>");
        const SymGraph sg = parse_graph(document);
        json r = report_header("render", document);
        const Placement placement = symmetric_generic_positions(sg, opt.seed);
        std::optional<TreePartition> partition;
        if (check_c3_isostatic(sg).isostatic) partition = certify(sg).partition;
        const std::string svg = render_svg(sg.graph(), placement.positions, partition ? &*partition : nullptr);

        std::ofstream file(opt.out, std::ios::binary);
        if (!file) throw Error(ErrorCode::IoError, "cannot open " + opt.out + " for writing");
        file << svg;
        file.close();
        if (!file) throw Error(ErrorCode::IoError, "failed writing " + opt.out);

        r["seed"] = opt.seed;
        r["out"] = opt.out;
        r["circles"] = sg.graph().vertex_count();
        r["segments"] = sg.graph().edge_count();
        r["styled"] = partition.has_value();
        emit(r, "wrote " + opt.out, opt, out);
        return kOk;
    } catch (const Error& e) {
        return diagnose("render", e, err);
    }
}

int run_command(std::string_view command, const std::string& path, const Options& opt, std::ostream& out,
                std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "c3rigid " << command << ": IoError: cannot read " << path << "\n";
        return kFailure;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string document = buf.str();

    if (command == "check") return run_check(document, opt, out, err);
    if (command == "certify") return run_certify(document, opt, out, err);
    if (command == "realize") return run_realize(document, opt, out, err);
    if (command == "oracle") return run_oracle(document, opt, out, err);
    if (command == "render") return run_render(document, opt, out, err);
    err << "c3rigid: unknown command " << command << "\n";
    return kFailure;
}

}  // namespace c3rigid::cli
