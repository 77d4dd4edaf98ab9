// Command-line front end: solve / reduce / translate / verify / enumerate /
// selftest over the text formats defined in reconfig/io.hpp.
//
// Exit codes: 0 ok, 2 parse error, 3 cap exceeded, 4 precondition violated,
// 5 invalid sequence, 1 anything else.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reconfig/explorer.hpp"
#include "reconfig/io.hpp"
#include "reconfig/reduction.hpp"
#include "reconfig/selftest.hpp"
#include "reconfig/translate.hpp"

namespace fs = std::filesystem;
using namespace reconfig;

namespace {

struct RunConfig {
  std::uint64_t cap = kDefaultCap;
  bool strict = false;
  bool autopad = false;
  std::string outdir = ".";
};

fs::path out_path(const RunConfig& rc, const fs::path& input, const std::string& suffix) {
  fs::create_directories(rc.outdir);
  return fs::path(rc.outdir) / (input.stem().string() + suffix);
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  fn(out);
  std::cout << "wrote " << path.string() << "\n";
}

/// Path to record inside a certificate: relative to the certificate's
/// directory when possible, so the bundle stays relocatable.
std::string record_path(const fs::path& target, const fs::path& outdir) {
  const auto rel = fs::proximate(fs::absolute(target), fs::absolute(outdir));
  return rel.empty() ? fs::absolute(target).string() : rel.string();
}

int cmd_solve(const RunConfig& rc, const std::string& instance_path) {
  const Instance inst = read_instance_file(instance_path);
  const auto result = reachable(inst, rc.cap);
  std::cout << (result.decision ? "YES" : "NO") << "\n";
  if (result.decision) {
    const auto wpath = out_path(rc, instance_path, ".witness");
    std::ofstream out(wpath);
    if (!out) throw Error("cannot write " + wpath.string());
    write_sequence(out, *result.witness);
    std::cerr << "witness: " << wpath.string() << "\n";
  }
  return 0;
}

int cmd_reduce(const RunConfig& rc, const std::string& kind, const std::string& instance_path,
               MoveRule produced_rule) {
  Instance inst = read_instance_file(instance_path);
  if (kind == "clr2bbr") {
    fs::path source_for_cert = instance_path;
    if (rc.autopad) {
      const int before = inst.graph.vertex_count();
      inst = pad_clr(inst);
      if (inst.graph.vertex_count() != before) {
        source_for_cert = out_path(rc, instance_path, ".padded.instance");
        write_file(source_for_cert, [&](std::ostream& o) { write_instance(o, inst); });
      }
    }
    const ReductionCert cert = reduce_clr_to_bbr(inst);
    const auto prod_path = out_path(rc, instance_path, ".bbr.instance");
    write_file(prod_path, [&](std::ostream& o) { write_instance(o, cert.produced); });
    write_file(out_path(rc, instance_path, ".bbr.cert"), [&](std::ostream& o) {
      write_certificate(o, cert, record_path(source_for_cert, rc.outdir),
                        record_path(prod_path, rc.outdir));
    });
    return 0;
  }
  if (kind == "bbr2ccr") {
    const Instance produced = reduce_bbr_to_ccr(inst, produced_rule);
    write_file(out_path(rc, instance_path, ".ccr.instance"),
               [&](std::ostream& o) { write_instance(o, produced); });
    return 0;
  }
  throw PreconditionViolated("unknown reduction '" + kind + "' (expected clr2bbr or bbr2ccr)");
}

int cmd_translate(const RunConfig& rc, const std::string& direction,
                  const std::string& cert_path, const std::string& seq_path) {
  const ReductionCert cert = load_certificate(cert_path);
  const Sequence seq = read_sequence_file(seq_path);
  if (direction == "lift") {
    const auto [lifted, trace] = lift_clique_sequence(cert, seq);
    if (auto v = verify_sequence(cert.produced, lifted))
      throw Error("lifted sequence failed re-verification at index " + std::to_string(v->index) +
                  ": " + v->reason);
    write_file(out_path(rc, seq_path, ".lifted"),
               [&](std::ostream& o) { write_sequence(o, lifted); });
    write_file(out_path(rc, seq_path, ".trace"),
               [&](std::ostream& o) { write_trace(o, trace); });
    std::cout << "configs: " << seq.steps.size() << " -> " << lifted.steps.size() << "\n";
    return 0;
  }
  if (direction == "project") {
    const Sequence projected = project_biclique_sequence(cert, seq);
    if (auto v = verify_sequence(cert.source, projected))
      throw Error("projected sequence failed re-verification at index " +
                  std::to_string(v->index) + ": " + v->reason);
    write_file(out_path(rc, seq_path, ".projected"),
               [&](std::ostream& o) { write_sequence(o, projected); });
    std::cout << "configs: " << seq.steps.size() << " -> " << projected.steps.size() << "\n";
    return 0;
  }
  throw PreconditionViolated("unknown direction '" + direction + "' (expected lift or project)");
}

int cmd_verify(const std::string& instance_path, const std::string& seq_path) {
  const Instance inst = read_instance_file(instance_path);
  const Sequence seq = read_sequence_file(seq_path);
  if (auto v = verify_sequence(inst, seq)) {
    std::cout << "violation at index " << v->index << ": " << v->reason << "\n";
    return 5;
  }
  std::cout << "ok\n";
  return 0;
}

int cmd_enumerate(const RunConfig& rc, const std::string& instance_path) {
  const Instance inst = read_instance_file(instance_path);
  for (const Config& c : enumerate_configs(inst.graph, inst.spec, rc.cap))
    std::cout << format_config(c) << "\n";
  return 0;
}

int cmd_selftest(const RunConfig& rc) {
  SelftestParams prm;
  prm.cap = rc.cap;
  bool any_failed = false;
  for (const SuiteResult& r : run_selftest(prm)) {
    std::cout << "suite: " << r.name << "\n";
    std::cout << "  scale: " << r.scale << "\n";
    if (r.skipped) {
      std::cout << "  result: SKIPPED (" << r.detail << ")\n";
    } else if (r.failed) {
      any_failed = true;
      std::cout << "  result: FAILED\n  counterexample: " << r.detail << "\n";
    } else {
      std::cout << "  result: ok (" << r.checked << " checks)\n";
    }
  }
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial reconfiguration toolkit"};
  app.require_subcommand(1);

  RunConfig rc;
  app.add_option("--cap", rc.cap, "candidate-state cap for enumeration and search")
      ->capture_default_str();
  app.add_flag("--strict", rc.strict,
               "force strictly deterministic output (always on in this build)");
  app.add_option("--outdir", rc.outdir, "directory for produced files")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "decide reachability; print YES/NO, write a witness");
  std::string solve_inst;
  solve->add_option("instance", solve_inst, "instance file")->required();

  auto* reduce = app.add_subcommand("reduce", "transform an instance (clr2bbr or bbr2ccr)");
  std::string reduce_kind, reduce_inst, reduce_rule = "cj";
  reduce->add_option("kind", reduce_kind, "clr2bbr | bbr2ccr")->required();
  reduce->add_option("instance", reduce_inst, "instance file")->required();
  reduce->add_flag("--autopad", rc.autopad, "pad clique instances to n-k-1 = C(k,2) first");
  reduce->add_option("--rule", reduce_rule, "produced rule for bbr2ccr: cj | cs")
      ->check(CLI::IsMember({"tj", "cj", "cs", "cs1"}))
      ->capture_default_str();

  auto* translate = app.add_subcommand("translate", "lift or project a sequence across a reduction");
  std::string tr_dir, tr_cert, tr_seq;
  translate->add_option("direction", tr_dir, "lift | project")->required();
  translate->add_option("certificate", tr_cert, "certificate file")->required();
  translate->add_option("sequence", tr_seq, "sequence file")->required();

  auto* verify = app.add_subcommand("verify", "check a sequence against an instance");
  std::string ver_inst, ver_seq;
  verify->add_option("instance", ver_inst, "instance file")->required();
  verify->add_option("sequence", ver_seq, "sequence file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list all configs satisfying the property");
  std::string enum_inst;
  enumerate->add_option("instance", enum_inst, "instance file")->required();

  auto* selftest = app.add_subcommand("selftest", "run the built-in equivalence suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(rc, solve_inst);
    if (*reduce) return cmd_reduce(rc, reduce_kind, reduce_inst, parse_rule(reduce_rule, 0));
    if (*translate) return cmd_translate(rc, tr_dir, tr_cert, tr_seq);
    if (*verify) return cmd_verify(ver_inst, ver_seq);
    if (*enumerate) return cmd_enumerate(rc, enum_inst);
    if (*selftest) return cmd_selftest(rc);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InvalidSourceSequence& e) {
    std::cerr << "invalid sequence: " << e.what() << "\n";
    return 5;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
