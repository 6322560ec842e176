#include "tribranch/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "tribranch/complex.hpp"
#include "tribranch/spec_io.hpp"

namespace tribranch {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string report_path;
  bool quiet = false;
  std::string spec_path;
  std::string mode = "outer";
  std::string out_path;
  int site = 1;
  bool extend_path = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("error while writing " + path);
}

ValidationReport validate_spec(const OpenBookSpec& spec) {
  auto report = validate_monodromy(spec.page, spec.monodromy);
  if (spec.pants_data) report.merge(validate_path(spec.page, *spec.pants_data, spec.monodromy));
  return report;
}

std::string first_violation(const ValidationReport& r) {
  return std::to_string(r.violations.size()) + " violation(s); first: " + r.violations.front().message;
}

// One command's outcome: exit code, machine report, human summary line.
struct Outcome {
  int code = 0;
  Json report = Json::object();
  std::string summary;
};

Outcome fail(Outcome o, int code, const std::string& message) {
  o.code = code;
  o.report["error"] = message;
  o.summary = message;
  return o;
}

Outcome cmd_validate(const OpenBookSpec& spec, Outcome o) {
  const auto report = validate_spec(spec);
  o.report["validation"] = validation_to_json(report);
  o.report["valid"] = report.ok();
  o.code = report.ok() ? 0 : 1;
  o.summary = report.ok() ? "valid" : first_violation(report);
  return o;
}

Json complex_file(const TribranchedComplex& tc, const std::string& input_hash) {
  auto j = complex_to_json(tc);
  j["inventory"] = inventory_to_json(tc);
  j["input_sha256"] = input_hash;
  return j;
}

Outcome cmd_construct(const OpenBookSpec& spec, const Options& opt, Outcome o) {
  const auto report = validate_spec(spec);
  o.report["validation"] = validation_to_json(report);
  o.report["mode"] = opt.mode;
  if (!report.ok()) return fail(o, 1, first_violation(report));

  const auto tc = opt.mode == "naive" ? construct_naive(spec) : construct_outer(spec);
  const auto local = check_local_models(tc);
  const auto audit = euler_audit(tc);
  const auto text = dump(complex_file(tc, o.report["input_sha256"].get<std::string>()));
  write_file(opt.out_path, text);

  o.report["inventory"] = inventory_to_json(tc);
  o.report["local_models"] = validation_to_json(local);
  o.report["euler"] = {{"chi_from_branches", audit.chi_from_branches},
                       {"chi_from_inventory", audit.chi_from_inventory},
                       {"violations", validation_to_json(audit.report)}};
  o.report["complex_file"] = opt.out_path;
  o.report["complex_sha256"] = sha256_hex(text);
  o.code = local.ok() && audit.report.ok() ? 0 : 1;
  o.summary = std::to_string(tc.branches.size()) + " branches, " + std::to_string(tc.blocks.size()) +
              " blocks, " + std::to_string(tc.circles.size()) + " circles";
  if (!local.ok()) o.summary += "; local models: " + first_violation(local);
  if (!audit.report.ok()) o.summary += "; euler audit: " + first_violation(audit.report);
  return o;
}

Json certificate_report(const RankCertificate& cert, const EssentialityReport* ess) {
  Json j = certificate_to_json(cert);
  j["rank_verdict"] = j["verdict"];
  j.erase("verdict");
  if (ess) {
    const auto e = essentiality_to_json(*ess);
    j["conditions"] = e["conditions"];
    j["verdict"] = e["verdict"];
  }
  return j;
}

Outcome cmd_certify(const OpenBookSpec& spec, const Options& opt, Outcome o) {
  const auto report = validate_spec(spec);
  o.report["validation"] = validation_to_json(report);
  if (!report.ok()) return fail(o, 1, first_violation(report));

  const auto cert = rank_certificate(spec);
  o.report["certificate"] = certificate_report(cert, nullptr);
  if (!spec.pants_data) return fail(o, 1, "pants data required for outer construction");

  const auto tc = construct_outer(spec);
  const auto local = check_local_models(tc);
  o.report["inventory"] = inventory_to_json(tc);
  o.report["local_models"] = validation_to_json(local);
  const auto text = dump(complex_file(tc, o.report["input_sha256"].get<std::string>()));
  o.report["complex_sha256"] = sha256_hex(text);
  if (!opt.out_path.empty()) {
    write_file(opt.out_path, text);
    o.report["complex_file"] = opt.out_path;
  }
  if (!local.ok()) return fail(o, 1, "local models: " + first_violation(local));

  const auto ess = check_essential(tc, cert);
  o.report["certificate"] = certificate_report(cert, &ess);
  o.code = ess.verdict == EssentialVerdict::Essential ? 0 : 1;
  o.summary = to_string(ess.verdict);
  for (const auto& c : ess.conditions) {
    if (c.status == ConditionStatus::Fail || c.status == ConditionStatus::NotCertified)
      o.summary += "; condition (" + std::to_string(c.number) + ") " + to_string(c.status) + ": " + c.witness;
  }
  return o;
}

std::string homology_summary(const RankCertificate& cert) {
  return to_string(cert.h1) + ", lower bound " + std::to_string(cert.lower_bound) + ", " +
         to_string(cert.verdict);
}

Outcome cmd_homology(const OpenBookSpec& spec, Outcome o) {
  const auto report = validate_monodromy(spec.page, spec.monodromy);
  o.report["validation"] = validation_to_json(report);
  if (!report.ok()) return fail(o, 1, first_violation(report));
  const auto cert = rank_certificate(spec);
  o.report["certificate"] = certificate_report(cert, nullptr);
  o.summary = homology_summary(cert);
  o.report["summary"] = o.summary;
  return o;
}

Outcome cmd_stabilize(const OpenBookSpec& spec, const Options& opt, Outcome o) {
  const auto report = validate_spec(spec);
  o.report["validation"] = validation_to_json(report);
  if (!report.ok()) return fail(o, 1, first_violation(report));

  const auto before = rank_certificate(spec);
  const auto st = stabilize(spec, opt.site, opt.extend_path);
  const auto after = rank_certificate(st.spec);
  const auto text = dump(spec_to_json(st.spec));
  write_file(opt.out_path, text);

  o.report["site"] = opt.site;
  o.report["page"] = {{"genus", st.spec.page.genus}, {"boundary", st.spec.page.n_boundary}};
  o.report["change_of_basis"] = matrix_to_json(st.change_of_basis);
  o.report["path_extended"] = st.path_extended;
  o.report["h1_before"] = group_to_json(before.h1);
  o.report["h1_after"] = group_to_json(after.h1);
  o.report["spec_file"] = opt.out_path;
  o.report["spec_sha256"] = sha256_hex(text);
  const bool same = before.h1.free_rank == after.h1.free_rank && before.h1.torsion == after.h1.torsion;
  o.code = same ? 0 : 1;
  o.summary = "page (" + std::to_string(st.spec.page.genus) + "," + std::to_string(st.spec.page.n_boundary) +
              "), H_1 " + to_string(after.h1) + (same ? " (unchanged)" : " (CHANGED)");
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tribranched surfaces in open books: validation, construction and certification"};
  app.name("tribranch");
  app.require_subcommand(1);
  app.add_option("--report", opt.report_path, "write the JSON report here instead of stdout");
  app.add_flag("--quiet", opt.quiet, "suppress the summary line on stderr");

  auto spec_arg = [&](CLI::App* sub) {
    sub->add_option("spec", opt.spec_path, "spec file (JSON)")->required();
    sub->fallthrough();
  };
  auto* validate = app.add_subcommand("validate", "check pants data, path and monodromy");
  spec_arg(validate);
  auto* construct = app.add_subcommand("construct", "build a tribranched complex");
  spec_arg(construct);
  construct->add_option("--mode", opt.mode, "naive or outer")
      ->check(CLI::IsMember({"naive", "outer"}))
      ->capture_default_str();
  construct->add_option("--out", opt.out_path, "complex file to write")->required();
  auto* certify = app.add_subcommand("certify", "run the full essentiality pipeline");
  spec_arg(certify);
  certify->add_option("--out", opt.out_path, "also write the complex here");
  auto* homology = app.add_subcommand("homology", "H_1 of the open book and the rank certificate");
  spec_arg(homology);
  auto* stab = app.add_subcommand("stabilize", "positive stabilization at a boundary component");
  spec_arg(stab);
  stab->add_option("--site", opt.site, "boundary component (1-based)")->capture_default_str();
  stab->add_flag("--extend-path", opt.extend_path, "carry the pants path along");
  stab->add_option("--out", opt.out_path, "stabilized spec file to write")->required();

  std::vector<const char*> argv{"tribranch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "tribranch: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Outcome o;
  o.report["command"] = sub->get_name();
  o.report["input"] = opt.spec_path;
  try {
    const auto text = read_file(opt.spec_path);
    o.report["input_sha256"] = sha256_hex(text);
    const auto spec = parse_spec(text);
    o.report["name"] = spec.name;
    if (sub == validate) {
      o = cmd_validate(spec, o);
    } else if (sub == construct) {
      o = cmd_construct(spec, opt, o);
    } else if (sub == certify) {
      o = cmd_certify(spec, opt, o);
    } else if (sub == homology) {
      o = cmd_homology(spec, o);
    } else {
      o = cmd_stabilize(spec, opt, o);
    }
  } catch (const IoError& e) {
    o = fail(o, 2, e.what());
  } catch (const SchemaError& e) {
    o = fail(o, 2, std::string("schema: ") + e.what());
  } catch (const std::exception& e) {
    o = fail(o, 1, e.what());
  }
  o.report["exit_code"] = o.code;

  const auto text = dump(o.report);
  if (opt.report_path.empty()) {
    out << text;
  } else {
    try {
      write_file(opt.report_path, text);
    } catch (const IoError& e) {
      err << "tribranch: " << e.what() << "\n";
      return 2;
    }
  }
  if (!opt.quiet) err << sub->get_name() << ": " << o.summary << "\n";
  return o.code;
}

}  // namespace tribranch
