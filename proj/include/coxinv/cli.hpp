#ifndef COXINV_CLI_HPP
#define COXINV_CLI_HPP

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxinv/characters.hpp"
#include "coxinv/error.hpp"
#include "coxinv/multiplicity.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/report.hpp"
#include "coxinv/ringanalysis.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/verification.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

inline constexpr std::int64_t kDefaultHeightBound = 12;

struct Options {
  std::string family;
  int rank = 0;
  std::string format = "json";
  std::string out;
  bool timestamp = false;
  int rank_cap = kDefaultRankCap;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  std::int64_t height_bound = kDefaultHeightBound;
  int degree_bound = kDefaultDegreeBound;
  int max_rank = 6;
  std::string lambda;
  std::string mu;
  bool oracle = false;
};

inline Json assumptions() {
  return Json::array({"semistable(w, chi) is defined as w(chi) <= 0 in root coordinates for Coxeter w",
                      "krull_dim = dim(G/P_J) + 1 - rank",
                      "hilbert_consistent is a necessary condition only",
                      "enumerations are complete only up to the stated height bound"});
}

inline Weight parse_weight(const std::string& text, const RootSystem& rs, const char* what) {
  IntVec coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find(',', pos), text.size());
    std::string tok = text.substr(pos, end - pos);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not a comma-separated integer list: '" + text + "'");
    coords.push_back(v);
    pos = end + 1;
  }
  if (coords.size() != rs.n())
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has " + std::to_string(coords.size()) +
                                                " coordinates, rank is " + std::to_string(rs.rank()));
  return Weight(std::move(coords));
}

inline RootSystem build_spec(const Options& o) {
  if (o.family.size() != 1) throw Error(ErrorCode::InvalidArgument, "family must be one letter A-G, got '" + o.family + "'");
  return build(RootSystemSpec::parse(o.family[0], o.rank));
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline Report cmd_roots(const Options& o) {
  const auto rs = build_spec(o);
  Report r;
  r.spec = rs.spec();
  r.parameters = {{"command", "roots"}};
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    r.rows.push_back({{"index", k + 1},
                      {"root_coords", to_json(rs.positive_roots()[k])},
                      {"weight", to_json(rs.positive_root_weights()[k])},
                      {"height", rs.positive_roots()[k].height()},
                      {"coroot_coords", rs.coroot_coeffs(k)},
                      {"long", rs.root_half_norm(k) == rs.long_symmetrizer()}});
  }
  Json fundamentals = Json::array();
  for (const auto& w : rs.fundamental_weights()) fundamentals.push_back(to_json(w));
  r.extra["root_system"] = {{"cartan", rs.cartan_rows()},
                            {"cartan_det", rs.cartan_det()},
                            {"symmetrizers", rs.symmetrizers()},
                            {"dynkin_edges", rs.dynkin_edges()},
                            {"fundamental_weights_root_coords", fundamentals},
                            {"rho", to_json(rs.rho())},
                            {"highest_long_root",
                             {{"weight", to_json(rs.highest_long_root())},
                              {"root_coords", to_json(rs.highest_long_root_coords())}}},
                            {"positive_root_count", rs.positive_roots().size()}};
  r.checks.push_back(Check::equal("positive_root_count", "closed-form |R+| for the family",
                                  expected_positive_root_count(rs.spec()), rs.positive_roots().size()));
  return r;
}

inline Report cmd_coxeter(const Options& o) {
  const auto rs = build_spec(o);
  const auto elements = enumerate_coxeter_elements(rs, o.rank_cap);
  Report r;
  r.spec = rs.spec();
  r.parameters = {{"command", "coxeter"}, {"rank_cap", o.rank_cap}};
  bool lengths_ok = true;
  for (const auto& c : elements) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < rs.n(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < rs.n(); ++j) row.push_back(c.element.matrix(i, j));
      matrix.push_back(std::move(row));
    }
    const auto len = length(rs, c.element);
    lengths_ok = lengths_ok && len == rs.rank();
    r.rows.push_back({{"word", word_string(c.word())},
                      {"matrix", matrix},
                      {"length", len},
                      {"right_descents", right_descents(rs, c.element)}});
  }
  r.checks.push_back(Check::equal("coxeter_count", "2^(Dynkin edges) distinct Coxeter elements",
                                  std::int64_t{1} << rs.dynkin_edges(), elements.size()));
  r.checks.push_back({"coxeter_lengths", "every Coxeter element has length rank", rs.rank(),
                      lengths_ok ? Json(rs.rank()) : Json("mismatch"), lengths_ok});
  return r;
}

inline Report cmd_multiplicity(const Options& o) {
  const auto rs = build_spec(o);
  const Weight lambda = parse_weight(o.lambda, rs, "--lambda");
  const Weight mu = parse_weight(o.mu, rs, "--mu");
  const auto m = weight_multiplicity(rs, lambda, mu);
  Report r;
  r.spec = rs.spec();
  r.parameters = {{"command", "multiplicity"}, {"oracle", o.oracle}, {"weyl_cap", o.weyl_cap}};
  Json row = {{"lambda", to_json(lambda)},
              {"lambda_root_coords", to_json(rs.to_root_coords(lambda))},
              {"mu", to_json(mu)},
              {"mu_root_coords", to_json(rs.to_root_coords(mu))},
              {"multiplicity", m},
              {"weyl_dim", to_json(weyl_dim(rs, lambda))}};
  if (o.oracle) {
    const auto k = kostant_multiplicity_oracle(rs, lambda, mu, o.weyl_cap);
    row["oracle_multiplicity"] = k;
    r.checks.push_back(Check::equal("kostant_oracle", "Freudenthal and Kostant multiplicities agree", k, m));
  }
  r.rows.push_back(std::move(row));
  return r;
}

inline Report cmd_enumerate(const Options& o) {
  const auto rs = build_spec(o);
  Report r;
  r.spec = rs.spec();
  r.parameters = {{"command", "enumerate"}, {"height_bound", o.height_bound}, {"rank_cap", o.rank_cap},
                  {"assumptions", assumptions()}};
  for (const auto& f : enumerate_semistable_indecomposables(rs, o.height_bound, o.rank_cap))
    r.rows.push_back(enumeration_row(rs, f));
  return r;
}

inline Report cmd_classify(const Options& o) {
  const auto rs = build_spec(o);
  if (o.degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "--degree-bound must be at least 1");
  const auto found = enumerate_semistable_indecomposables(rs, o.height_bound, o.rank_cap);
  std::vector<std::optional<RingVerdict>> verdicts(found.size());
  parallel_for(found.size(), [&](std::size_t i) { verdicts[i] = verdict(rs, found[i], o.degree_bound); });

  Report r;
  r.spec = rs.spec();
  const bool oracle = weyl_group_order(rs.spec()) <= o.weyl_cap;
  r.parameters = {{"command", "classify"},       {"height_bound", o.height_bound}, {"degree_bound", o.degree_bound},
                  {"rank_cap", o.rank_cap},      {"weyl_cap", o.weyl_cap},         {"oracle_cross_check", oracle},
                  {"assumptions", assumptions()}};
  std::optional<KostantOracle> kostant;
  if (oracle) kostant.emplace(rs, o.weyl_cap);
  const Weight zero{IntVec(rs.n(), 0)};
  for (const auto& v : verdicts) {
    r.rows.push_back(verdict_row(rs, *v));
    const std::string tag = "chi=" + to_json(v->chi.root_coords).dump();
    if (kostant)
      r.checks.push_back(Check::equal(tag + "_kostant_h1", "h(1) equals the Kostant zero-weight multiplicity",
                                      kostant->multiplicity(v->chi.weight, zero), v->zero_weight_dim));
    r.checks.push_back({tag + "_coherent",
                        "polynomial verdict matched by Hilbert prefix and Krull dimension", true, theorem_coherent(*v),
                        theorem_coherent(*v)});
  }
  return r;
}

inline Report cmd_verify_paper(const Options& o) {
  VerificationOptions vo;
  vo.max_rank = o.max_rank;
  vo.rank_cap = o.rank_cap;
  vo.weyl_cap = o.weyl_cap;
  vo.degree_bound = o.degree_bound;
  if (vo.degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "--degree-bound must be at least 1");
  if (vo.max_rank < 1) throw Error(ErrorCode::InvalidArgument, "--max-rank must be at least 1");
  auto res = run_verification(vo);
  Report r;
  r.parameters = std::move(res.parameters);
  r.parameters["command"] = "verify-paper";
  r.parameters["assumptions"] = assumptions();
  r.rows = std::move(res.rows);
  r.checks = std::move(res.checks);
  return r;
}

inline int emit(const Report& report, const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = o.format == "tsv" ? to_tsv(report) : to_json_text(report);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text)) {
      err << "InvalidArgument: cannot write " << o.out << "\n";
      return kUsage;
    }
  }
  if (!report.all_passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) err << "FAIL " << c.name << ": expected " << c.expected.dump() << ", got " << c.actual.dump() << "\n";
    return kCheckFailed;
  }
  return kPass;
}

/// Entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus-invariant rings of flag varieties: root data, Coxeter elements, multiplicities, verdicts",
               "coxinv"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", o.out, "Write the report to PATH instead of stdout");
    sub->add_flag("--timestamp", o.timestamp, "Add a header with the UTC time (not part of the canonical body)");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Family letter A-G")->required();
    sub->add_option("--rank", o.rank, "Rank")->required();
    add_output(sub);
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--rank-cap", o.rank_cap, "Largest rank for n! Coxeter enumeration")->capture_default_str();
    sub->add_option("--weyl-cap", o.weyl_cap, "Largest |W| for the Kostant oracle")->capture_default_str();
  };

  auto* roots = app.add_subcommand("roots", "Cartan matrix, positive roots, fundamental weights, rho, alpha_0");
  add_spec(roots);
  auto* coxeter = app.add_subcommand("coxeter", "Coxeter elements with lengths and right descent sets");
  add_spec(coxeter);
  add_caps(coxeter);
  auto* mult = app.add_subcommand("multiplicity", "Weight multiplicity of mu in V(lambda)");
  add_spec(mult);
  add_caps(mult);
  mult->add_option("--lambda", o.lambda, "Highest weight, comma-separated weight coordinates")->required();
  mult->add_option("--mu", o.mu, "Weight, comma-separated weight coordinates")->required();
  mult->add_flag("--oracle", o.oracle, "Cross-check against the Kostant partition function");
  auto* enumerate = app.add_subcommand("enumerate", "Semistable indecomposable dominant characters");
  add_spec(enumerate);
  add_caps(enumerate);
  enumerate->add_option("--height-bound", o.height_bound, "Largest root-coordinate height")->capture_default_str();
  auto* classify = app.add_subcommand("classify", "Polynomiality verdicts for every enumerated character");
  add_spec(classify);
  add_caps(classify);
  classify->add_option("--height-bound", o.height_bound, "Largest root-coordinate height")->capture_default_str();
  classify->add_option("--degree-bound", o.degree_bound, "Hilbert prefix length D")->capture_default_str();
  auto* verify = app.add_subcommand("verify-paper", "Run every named check; exit 0 iff all pass");
  add_output(verify);
  add_caps(verify);
  verify->add_option("--max-rank", o.max_rank, "Largest classical rank in sweeps")->capture_default_str();
  verify->add_option("--degree-bound", o.degree_bound, "Hilbert prefix length D")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  try {
    Report report;
    if (*roots) report = cmd_roots(o);
    else if (*coxeter) report = cmd_coxeter(o);
    else if (*mult) report = cmd_multiplicity(o);
    else if (*enumerate) report = cmd_enumerate(o);
    else if (*classify) report = cmd_classify(o);
    else report = cmd_verify_paper(o);
    if (o.timestamp) report.timestamp = utc_timestamp();
    return emit(report, o, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::Internal ? kCheckFailed : kUsage;
  }
}

}  // namespace coxinv::cli

#endif  // COXINV_CLI_HPP
