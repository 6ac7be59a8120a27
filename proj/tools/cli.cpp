#include "pyth/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pyth/conic.hpp"
#include "pyth/injections.hpp"
#include "pyth/monoid.hpp"
#include "pyth/ptpm.hpp"

namespace pyth::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string op = "bullet";
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> tikoo;
  std::optional<int> bound;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> seed;
  std::string target;
  std::vector<std::string> args;

  bool json() const { return format == "json"; }
};

// Integers outside the signed 64-bit range are emitted as decimal strings.
Json json_int(const Int& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.str();
}

Json json_triple(const Triple& t) { return Json::array({json_int(t.x()), json_int(t.y()), json_int(t.z())}); }
Json json_point(const ConicPoint& p) { return Json::array({json_int(p.u), json_int(p.v)}); }

Json json_matrix(const Mat3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(Json::array({m(i, 0).str(), m(i, 1).str(), m(i, 2).str()}));
  return rows;
}

std::vector<Int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Int::parse(item));
    } catch (const std::invalid_argument&) {
      throw UsageError(what + ": '" + text + "' is not a comma-separated list of integers");
    }
  }
  if (!text.empty() && text.back() == ',') throw UsageError(what + ": trailing comma in '" + text + "'");
  return out;
}

Triple parse_triple(const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, what);
  if (v.size() != 3) throw UsageError(what + ": expected x,y,z but got '" + text + "'");
  return triple(v[0], v[1], v[2]);
}

ConicPoint parse_point(const std::string& text, const std::string& what) {
  const auto v = parse_ints(text, what);
  if (v.size() != 2) throw UsageError(what + ": expected u,v but got '" + text + "'");
  return {v[0], v[1]};
}

Rat parse_rat(const std::string& text, const std::string& flag) {
  try {
    return Rat::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected an integer or fraction p/q, got '" + text + "'");
  }
}

void require_args(const Options& o, std::size_t n, const std::string& shape) {
  if (o.args.size() != n) {
    throw UsageError("expected " + std::to_string(n) + " argument(s): " + shape + " (got " +
                     std::to_string(o.args.size()) + ")");
  }
}

BetaGamma require_beta_gamma(const Options& o) {
  if (!o.beta) throw UsageError("--beta is required");
  if (!o.gamma) throw UsageError("--gamma is required");
  return {parse_rat(*o.beta, "--beta"), parse_rat(*o.gamma, "--gamma")};
}

TikooKind require_tikoo(const Options& o) {
  const auto kind = parse_tikoo(*o.tikoo);
  if (!kind) throw UsageError("--tikoo: expected one of B1..B5, got '" + *o.tikoo + "'");
  return *kind;
}

/// Selects the product named by --op and its parameters, and records that
/// choice in `info` for json output.
ProductKind resolve_kind(const Options& o, Json& info) {
  info["op"] = o.op;
  if (o.op == "te") return TausskyEckert{};
  if (o.op == "bs") return BeauregardSom{};
  if (o.tikoo) {
    if (o.beta || o.gamma) throw UsageError("--tikoo cannot be combined with --beta/--gamma");
    const TikooKind k = require_tikoo(o);
    info["tikoo"] = std::string(tikoo_name(k));
    return Bullet{to_rational(tikoo_form(k))};
  }
  if (!o.beta && !o.gamma) throw UsageError("--op bullet needs --beta and --gamma, or --tikoo");
  const BetaGamma bg = require_beta_gamma(o);
  info["beta"] = bg.beta.str();
  info["gamma"] = bg.gamma.str();
  return BulletBetaGamma{bg};
}

void emit(const Options& o, std::ostream& out, const Json& j, const std::string& text) {
  if (o.json()) {
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
  }
}

std::string witness_text(const std::optional<TriplePair>& w) {
  if (!w) return "";
  return " (witness " + to_string(w->first) + " " + to_string(w->second) + ")";
}

Json witness_json(const std::optional<TriplePair>& w) {
  if (!w) return nullptr;
  return Json::array({json_triple(w->first), json_triple(w->second)});
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

void cmd_product(const Options& o, std::ostream& out) {
  require_args(o, 2, "LHS RHS");
  Json j;
  const ProductKind k = resolve_kind(o, j);
  const Triple lhs = parse_triple(o.args[0], "LHS");
  const Triple rhs = parse_triple(o.args[1], "RHS");
  const Triple result = product(k, lhs, rhs);
  j["lhs"] = json_triple(lhs);
  j["rhs"] = json_triple(rhs);
  j["result"] = json_triple(result);
  emit(o, out, j, to_string(result));
}

void cmd_power(const Options& o, std::ostream& out) {
  require_args(o, 2, "TRIPLE N");
  Json j;
  const ProductKind k = resolve_kind(o, j);
  const Triple base = parse_triple(o.args[0], "TRIPLE");
  const auto exps = parse_ints(o.args[1], "N");
  if (exps.size() != 1 || exps[0] < 0 || !exps[0].fits_int64()) {
    throw UsageError("N: expected a non-negative integer, got '" + o.args[1] + "'");
  }
  const auto n = static_cast<unsigned long>(exps[0].to_int64());
  const Triple result = power(k, base, n);
  j["base"] = json_triple(base);
  j["exponent"] = n;
  j["result"] = json_triple(result);
  emit(o, out, j, to_string(result));
}

void cmd_inverse(const Options& o, std::ostream& out) {
  require_args(o, 1, "POINT or TRIPLE");
  const BetaGamma bg = require_beta_gamma(o);
  Json j;
  j["beta"] = bg.beta.str();
  j["gamma"] = bg.gamma.str();
  const auto values = parse_ints(o.args[0], "POINT or TRIPLE");
  if (values.size() == 2) {
    const ConicPoint p{values[0], values[1]};
    const ConicPoint inv = inverse_point(bg, p);
    j["input"] = json_point(p);
    j["result"] = json_point(inv);
    emit(o, out, j, to_string(inv));
  } else if (values.size() == 3) {
    const Triple t = triple(values[0], values[1], values[2]);
    const auto p = unit_preimage(bg, t);
    if (!p) {
      throw Error(ErrorKind::NotOnUnitConic, to_string(t) + " is not phi of a point on the unit conic");
    }
    const Triple inv = triple_inverse(bg, *p);
    j["input"] = json_triple(t);
    j["point"] = json_point(*p);
    j["result"] = json_triple(inv);
    emit(o, out, j, to_string(inv));
  } else {
    throw UsageError("POINT or TRIPLE: expected u,v or x,y,z but got '" + o.args[0] + "'");
  }
}

void cmd_matrix(const Options& o, std::ostream& out) {
  require_args(o, 1, "TRIPLE");
  const Triple t = parse_triple(o.args[0], "TRIPLE");
  Json j;
  Mat3 m;
  if (o.tikoo) {
    if (o.beta || o.gamma) throw UsageError("--tikoo cannot be combined with --beta/--gamma");
    const TikooKind k = require_tikoo(o);
    j["tikoo"] = std::string(tikoo_name(k));
    m = to_rational(tikoo(k, t));
  } else {
    const BetaGamma bg = require_beta_gamma(o);
    j["beta"] = bg.beta.str();
    j["gamma"] = bg.gamma.str();
    m = m_beta_gamma(bg, t);
  }
  j["triple"] = json_triple(t);
  j["matrix"] = json_matrix(m);
  j["integral"] = is_integral(m);
  j["det"] = det(m).str();
  std::string text;
  for (int i = 0; i < 3; ++i) {
    text += m(i, 0).str() + "," + m(i, 1).str() + "," + m(i, 2).str();
    if (i < 2) text += '\n';
  }
  emit(o, out, j, text);
}

void verify_natural(const Options& o, std::ostream& out) {
  Json j;
  j["target"] = "natural";
  LinearForm<Rat> form;
  std::string label;
  if (o.tikoo) {
    const TikooKind k = require_tikoo(o);
    form = to_rational(tikoo_form(k));
    label = std::string(tikoo_name(k));
    j["tikoo"] = label;
  } else {
    const BetaGamma bg = require_beta_gamma(o);
    form = beta_gamma_form(bg).linear();
    label = "beta=" + bg.beta.str() + " gamma=" + bg.gamma.str();
    j["beta"] = bg.beta.str();
    j["gamma"] = bg.gamma.str();
  }
  const NaturalReport r = is_natural(form);
  j["axiom1"] = r.axiom1;
  j["axiom2"] = r.axiom2;
  j["axiom3"] = r.axiom3;
  j["natural"] = r.all();
  j["witnesses"] = {{"axiom1", witness_json(r.axiom1_witness)}, {"axiom2", witness_json(r.axiom2_witness)}};
  std::string text = "natural " + label + "\n";
  text += "axiom1 homomorphism: " + verdict(r.axiom1) + witness_text(r.axiom1_witness) + "\n";
  text += "axiom2 commutativity: " + verdict(r.axiom2) + witness_text(r.axiom2_witness) + "\n";
  text += "axiom3 identity: " + verdict(r.axiom3) + "\n";
  text += "natural: " + std::string(r.all() ? "yes" : "no");
  emit(o, out, j, text);
}

void verify_ptpm(const Options& o, std::ostream& out) {
  const int bound = o.bound.value_or(4);
  if (bound < 1) throw UsageError("--bound: must be at least 1");
  Json j;
  j["target"] = "ptpm";
  LinearForm<Rat> form;
  std::optional<bool> conditions;
  std::string label;
  if (o.tikoo) {
    const TikooKind k = require_tikoo(o);
    form = to_rational(tikoo_form(k));
    label = std::string(tikoo_name(k));
    j["tikoo"] = label;
  } else {
    const BetaGamma bg = require_beta_gamma(o);
    const StandardFormCoeffs c = beta_gamma_form(bg);
    form = c.linear();
    conditions = necessary_conditions(c);
    label = "beta=" + bg.beta.str() + " gamma=" + bg.gamma.str();
    j["beta"] = bg.beta.str();
    j["gamma"] = bg.gamma.str();
  }
  const PreservationReport r = preserves_pythagorean(form, bound);
  j["bound"] = bound;
  j["checked"] = r.checked;
  j["preserves"] = r.preserves;
  j["necessary_conditions"] = conditions ? Json(*conditions) : Json(nullptr);
  std::string text = "ptpm " + label + " bound=" + std::to_string(bound) + "\n";
  if (conditions) text += "necessary conditions: " + verdict(*conditions) + "\n";
  text += "preservation: " + verdict(r.preserves) + " (" + std::to_string(r.checked) + " checks)";
  if (r.counterexample) {
    const auto& w = *r.counterexample;
    std::string image = w.image(0).str() + "," + w.image(1).str() + "," + w.image(2).str();
    j["counterexample"] = {{"mn", json_point(*w.mn)}, {"uv", json_point(w.uv)}, {"image", image}};
    text += "\ncounterexample m,n=" + to_string(*w.mn) + " u,v=" + to_string(w.uv) + " image=" + image;
  } else {
    j["counterexample"] = nullptr;
  }
  emit(o, out, j, text);
}

void verify_axioms_cmd(const Options& o, std::ostream& out) {
  const int bound = o.bound.value_or(4);
  if (bound < 1) throw UsageError("--bound: must be at least 1");
  Json j;
  j["target"] = "axioms";
  const ProductKind k = resolve_kind(o, j);
  TripleSet samples = sample_triples(bound);
  if (o.seed) {
    const TripleSet extra = seeded_samples(*o.seed, 32, 2 * bound);
    samples.insert(samples.end(), extra.begin(), extra.end());
    std::sort(samples.begin(), samples.end(), triple_less);
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    j["seed"] = *o.seed;
  }
  const AxiomReport r = verify_axioms(k, samples);
  j["bound"] = bound;
  j["samples"] = samples.size();
  j["commutative"] = r.commutative;
  j["associative"] = r.associative;
  j["identity"] = r.identity;
  j["homomorphic"] = r.homomorphic;
  j["closed_on_z3"] = r.closed_on_z3;
  j["closed_on_p"] = r.closed_on_p;
  j["basis_natural"] = r.basis.all();
  j["monoid"] = r.monoid();
  Json assoc = nullptr;
  std::string assoc_text;
  if (r.associativity_witness) {
    const auto& w = *r.associativity_witness;
    assoc = Json::array({json_triple(w[0]), json_triple(w[1]), json_triple(w[2])});
    assoc_text = " (witness " + to_string(w[0]) + " " + to_string(w[1]) + " " + to_string(w[2]) + ")";
  }
  j["witnesses"] = {{"commutative", witness_json(r.commutativity_witness)},
                    {"associative", assoc},
                    {"identity", r.identity_witness ? json_triple(*r.identity_witness) : Json(nullptr)},
                    {"homomorphic", witness_json(r.homomorphism_witness)},
                    {"closed_on_z3", witness_json(r.integrality_witness)},
                    {"closed_on_p", witness_json(r.closure_witness)}};
  std::string text = "axioms over " + std::to_string(samples.size()) + " samples\n";
  text += "commutative: " + verdict(r.commutative) + witness_text(r.commutativity_witness) + "\n";
  text += "associative: " + verdict(r.associative) + assoc_text + "\n";
  text += "identity: " + verdict(r.identity) +
          (r.identity_witness ? " (witness " + to_string(*r.identity_witness) + ")" : "") + "\n";
  text += "homomorphic: " + verdict(r.homomorphic) + witness_text(r.homomorphism_witness) + "\n";
  text += "closed on Z^3: " + verdict(r.closed_on_z3) + witness_text(r.integrality_witness) + "\n";
  text += "closed on P: " + verdict(r.closed_on_p) + witness_text(r.closure_witness) + "\n";
  text += "basis naturality: " + verdict(r.basis.all()) + "\n";
  text += "monoid: " + std::string(r.monoid() ? "yes" : "no");
  emit(o, out, j, text);
}

void cmd_verify(const Options& o, std::ostream& out) {
  if (!o.args.empty()) throw UsageError("verify takes no arguments after the target");
  if (o.target == "natural") return verify_natural(o, out);
  if (o.target == "ptpm") return verify_ptpm(o, out);
  if (o.target == "axioms") return verify_axioms_cmd(o, out);
  throw UsageError("verify: unknown target '" + o.target + "' (expected natural, ptpm or axioms)");
}

void cmd_pell(const Options& o, std::ostream& out) {
  require_args(o, 1, "D");
  const auto d = parse_ints(o.args[0], "D");
  if (d.size() != 1) throw UsageError("D: expected one integer, got '" + o.args[0] + "'");
  const PellSolution s = pell_minimal(d[0]);
  Json j;
  j["d"] = json_int(s.d);
  j["x"] = json_int(s.x1);
  j["y"] = json_int(s.y1);
  emit(o, out, j, s.x1.str() + "," + s.y1.str());
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.args.empty()) throw UsageError("enumerate takes no positional arguments");
  if (o.count && o.bound) throw UsageError("--count and --bound are mutually exclusive");
  const BetaGamma bg = require_beta_gamma(o);
  std::vector<ConicPoint> points;
  Json j;
  j["beta"] = bg.beta.str();
  j["gamma"] = bg.gamma.str();
  j["fundamental"] = json_point(fundamental_unit_point(bg));
  if (o.bound) {
    if (*o.bound < 0) throw UsageError("--bound: must be non-negative");
    points = unit_points_in_box(bg, *o.bound);
    j["bound"] = *o.bound;
  } else {
    points = enumerate_unit_points(bg, o.count.value_or(5));
    j["count"] = points.size();
  }
  Json list = Json::array();
  std::string text;
  for (std::size_t i = 0; i < points.size(); ++i) {
    list.push_back(json_point(points[i]));
    text += to_string(points[i]);
    if (i + 1 < points.size()) text += '\n';
  }
  j["points"] = list;
  if (o.json() || !text.empty()) emit(o, out, j, text);
}

void cmd_conic_through(const Options& o, std::ostream& out) {
  require_args(o, 1, "POINT");
  if (!o.beta) throw UsageError("--beta is required");
  const ConicPoint p = parse_point(o.args[0], "POINT");
  const Rat beta = parse_rat(*o.beta, "--beta");
  const Rat gamma = conic_through(p, beta);
  Json j;
  j["point"] = json_point(p);
  j["beta"] = beta.str();
  j["gamma"] = gamma.str();
  emit(o, out, j, gamma.str());
}

enum Flag : unsigned {
  kOp = 1U << 0,
  kBetaGamma = 1U << 1,
  kTikoo = 1U << 2,
  kBound = 1U << 3,
  kCount = 1U << 4,
  kSeed = 1U << 5,
  kBetaOnly = 1U << 6,
};

CLI::App* add_command(CLI::App& app, Options& o, const std::string& name, const std::string& help,
                      unsigned flags, const std::string& args_help) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->fallthrough();
  if (flags & kOp) sub->add_option("--op", o.op, "bullet, te or bs")->check(CLI::IsMember({"bullet", "te", "bs"}));
  if (flags & (kBetaGamma | kBetaOnly)) sub->add_option("--beta", o.beta, "integer or fraction p/q");
  if (flags & kBetaGamma) sub->add_option("--gamma", o.gamma, "integer or fraction p/q");
  if (flags & kTikoo) sub->add_option("--tikoo", o.tikoo, "B1..B5");
  if (flags & kBound) sub->add_option("--bound", o.bound, "scan bound");
  if (flags & kCount) sub->add_option("--count", o.count, "number of points");
  if (flags & kSeed) sub->add_option("--seed", o.seed, "seed for extra sampled triples");
  if (!args_help.empty()) sub->add_option("args", o.args, args_help);
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact monoids and groups of Pythagorean triples", "pyth"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  add_command(app, o, "product", "product of two triples", kOp | kBetaGamma | kTikoo, "LHS RHS");
  add_command(app, o, "power", "n-th power of a triple", kOp | kBetaGamma | kTikoo, "TRIPLE N");
  add_command(app, o, "inverse", "inverse of a unit-conic point or of its triple", kBetaGamma, "POINT or TRIPLE");
  add_command(app, o, "matrix", "M_{beta,gamma} or a Tikoo matrix at a triple", kBetaGamma | kTikoo, "TRIPLE");
  CLI::App* verify = add_command(app, o, "verify", "axiom and preservation checks",
                                 kOp | kBetaGamma | kTikoo | kBound | kSeed, "");
  verify->add_option("target", o.target, "natural, ptpm or axioms")->required();
  add_command(app, o, "pell", "fundamental solution of x^2 - D y^2 = 1", 0, "D");
  add_command(app, o, "enumerate", "lattice points on the unit conic", kBetaGamma | kCount | kBound, "");
  add_command(app, o, "conic-through", "gamma of the unit conic through a point", kBetaOnly, "POINT");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "product") cmd_product(o, out);
    else if (command == "power") cmd_power(o, out);
    else if (command == "inverse") cmd_inverse(o, out);
    else if (command == "matrix") cmd_matrix(o, out);
    else if (command == "verify") cmd_verify(o, out);
    else if (command == "pell") cmd_pell(o, out);
    else if (command == "enumerate") cmd_enumerate(o, out);
    else if (command == "conic-through") cmd_conic_through(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    if (o.json()) {
      out << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace pyth::cli
