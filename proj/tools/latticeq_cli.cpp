// latticeq: enumerate Delannoy/Schroeder paths, compute maj distributions,
// run the phi bijection and the psi collision finder, and verify the closed
// forms by brute force.
//
// Exit status: 0 success, 1 verification failure or MISMATCH, 2 usage or
// domain error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latticeq/bijections.hpp"
#include "latticeq/closedform.hpp"
#include "latticeq/error.hpp"
#include "latticeq/paths.hpp"
#include "latticeq/stats.hpp"
#include "latticeq/verify.hpp"

namespace {

using namespace latticeq;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int run_enumerate(const std::string& spec, const std::string& format) {
  const auto range = enumerate(PathFamily::parse(spec));
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : range) arr.push_back(w.str());
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& w : range) std::cout << w.str() << "\n";
  }
  return kOk;
}

QPoly closed_form(const PathFamily& f, const StepOrder& order) {
  switch (f.kind()) {
    case PathFamily::Kind::Delannoy: return mdel_closed(f.m(), f.n(), f.l());
    case PathFamily::Kind::Schroeder: return msch_closed(f.n(), f.l(), order);
    case PathFamily::Kind::Bad: return mbdel_closed(f.n(), f.l(), order);
  }
  return {};
}

void write_csv(const PathFamily& f, const StepOrder& order, const QPoly& p) {
  std::cout << "family,n,l,order,power,coefficient\n";
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::cout << '"' << f.designator() << "\"," << f.n() << ',' << f.l() << ',' << order.str()
              << ',' << i << ',' << c[i] << "\n";
  }
}

int run_majdist(const std::string& spec, const std::string& order_text, const std::string& mode,
                const std::string& format) {
  const PathFamily family = PathFamily::parse(spec);
  const StepOrder order = StepOrder::parse(order_text);
  const bool want_brute = mode != "closed";
  const bool want_closed = mode != "brute";
  const QPoly brute = want_brute ? maj_distribution(family, order) : QPoly{};
  const QPoly closed = want_closed ? closed_form(family, order) : QPoly{};
  const bool match = !(want_brute && want_closed) || brute == closed;

  if (format == "json") {
    nlohmann::ordered_json doc{{"family", family.designator()}, {"order", order.str()}};
    if (want_brute) doc["brute"] = nlohmann::json::parse(to_json(brute));
    if (want_closed) doc["closed"] = nlohmann::json::parse(to_json(closed));
    if (want_brute && want_closed) doc["match"] = match;
    std::cout << doc.dump() << "\n";
  } else if (format == "csv") {
    write_csv(family, order, want_brute ? brute : closed);
    if (!match) std::cerr << "MISMATCH\n";
  } else if (want_brute && want_closed) {
    std::cout << "brute:  " << to_string(brute) << "\n"
              << "closed: " << to_string(closed) << "\n"
              << (match ? "MATCH" : "MISMATCH") << "\n";
  } else {
    std::cout << to_string(want_brute ? brute : closed) << "\n";
  }
  return match ? kOk : kFailed;
}

int run_phi(const std::string& word, const std::string& order_text, const std::string& direction) {
  const LatticeWord w = parse_word(word);
  const StepOrder order = StepOrder::parse(order_text);
  const PhiTrace t = direction == "inverse" ? phi_inverse_traced(w, order) : phi_traced(w, order);
  std::cout << t.image.str() << "\n"
            << "k=" << t.block.k << " r=" << t.block.r << " s=" << t.block.s << " case=("
            << static_cast<int>(t.rule) << ") maj " << t.maj_before << " -> " << t.maj_after
            << "\n";
  return kOk;
}

int run_psi_collisions(long long n, long long l, const std::string& format) {
  const auto groups = psi_collisions(n, l);
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& g : groups) {
      nlohmann::ordered_json pre = nlohmann::ordered_json::array();
      for (const auto& w : g.preimages) pre.push_back(w.str());
      arr.push_back({{"image", g.image.str()}, {"preimages", pre}});
    }
    std::cout << arr.dump() << "\n";
    return kOk;
  }
  if (groups.empty()) std::cout << "no collisions\n";
  for (const auto& g : groups) {
    std::cout << g.image.str() << " <= {";
    for (std::size_t i = 0; i < g.preimages.size(); ++i) {
      std::cout << (i ? ", " : "") << g.preimages[i].str();
    }
    std::cout << "}\n";
  }
  return kOk;
}

int run_verify(const VerifyOptions& options, const std::string& format,
               const std::string& report_path) {
  const VerificationReport report = run_verification(options);
  const std::string json = to_json(report);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::invalid_argument("cannot write report to '" + report_path + "'");
    out << json << "\n";
  }
  if (format == "json") {
    std::cout << json << "\n";
  } else {
    std::cout << summary(report);
  }
  return report.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delannoy/Schroeder path enumeration and major-index distributions"};
  app.require_subcommand(1);

  std::string family;
  std::string order;
  std::string format = "plain";
  const auto formats = CLI::IsMember({"plain", "json", "csv"});

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List a family's words in canonical order");
  enumerate_cmd->add_option("family", family, "del:m,n,l | sch:n,l | bdel:n,l")->required();
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  std::string mode = "both";
  auto* majdist_cmd = app.add_subcommand("majdist", "Distribution of maj over a family");
  majdist_cmd->add_option("family", family, "del:m,n,l | sch:n,l | bdel:n,l")->required();
  majdist_cmd->add_option("--order", order, "step order, e.g. E<D<N")->required();
  majdist_cmd->add_option("--mode", mode)->check(CLI::IsMember({"brute", "closed", "both"}));
  majdist_cmd->add_option("--format", format)->check(formats);

  std::string word;
  std::string direction = "forward";
  auto* phi_cmd = app.add_subcommand("phi", "Apply phi or its inverse to a word, with a trace");
  phi_cmd->add_option("word", word, "word over E, D, N")->required();
  phi_cmd->add_option("--order", order, "step order, e.g. E<D<N")->required();
  phi_cmd->add_option("--direction", direction)
      ->check(CLI::IsMember({"forward", "inverse"}));

  long long n = 0;
  long long l = 0;
  auto* psi_cmd = app.add_subcommand("psi-collisions", "Groups of bad paths sharing a psi image");
  psi_cmd->add_option("n", n)->required();
  psi_cmd->add_option("l", l)->required();
  psi_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  VerifyOptions verify_options;
  std::string scope = "all";
  std::string report_path;
  bool serial = false;
  bool negative_control = false;
  auto* verify_cmd = app.add_subcommand("verify", "Brute-force sweep of the closed forms and phi");
  verify_cmd->add_option("--n-max", verify_options.n_max)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--scope", scope)
      ->check(CLI::IsMember({"theorem", "lemma", "bijection", "all"}));
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
  verify_cmd->add_option("--report", report_path, "also write the JSON report to this file");
  verify_cmd->add_flag("--serial", serial, "run cells sequentially");
  verify_cmd->add_flag("--negative-control", negative_control,
                       "use a deliberately broken phi; the sweep must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate_cmd) return run_enumerate(family, format);
    if (*majdist_cmd) return run_majdist(family, order, mode, format);
    if (*phi_cmd) return run_phi(word, order, direction);
    if (*psi_cmd) return run_psi_collisions(n, l, format);
    if (*verify_cmd) {
      verify_options.scope = parse_scope(scope);
      verify_options.parallel = !serial;
      if (negative_control) verify_options.phi_variant = PhiVariant::SwappedSubcases;
      return run_verify(verify_options, format, report_path);
    }
  } catch (const latticeq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
