#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "orbicurve/orbicurve.hpp"

namespace orbicurve::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* usage_text =
    "usage: orb [--config FILE] [--format text|json|dot] <command> [args]\n"
    "\n"
    "commands:\n"
    "  chi g=<g> w=<a1,a2,...>          orbifold Euler characteristic\n"
    "  classify g=<g> w=<...>           Spherical | Parabolic | Hyperbolic | ExcludedPQ\n"
    "  k0 g=<g> w=<...> [--rank R --degree D --rank2 R --degree2 D]\n"
    "                                   averaged Euler form <<X,Y>> on K_0\n"
    "  rh chi=<p/q> order=<n>           Riemann-Hurwitz quotient chi\n"
    "  hurwitz chi=<even int < 0>       automorphism bound 42*|chi|\n"
    "  genus chi=<even int>             genus of the curve with that chi\n"
    "  triangle-order <a> <b> <c>       order of a spherical triangle group\n"
    "  lcm w=<...>                      lcm of the weights\n"
    "  perm order <p>                   order of a permutation\n"
    "  perm mul <p1> <p2> [...]         left-to-right product\n"
    "  perm group-order <p1> [...]      order of the generated group (capped)\n"
    "  perm simple <p1> [...]           simplicity of the generated group\n"
    "  presentation g=<g> w=<...>       orbifold fundamental group\n"
    "  witness <a> <b> <c>              minimal-degree permutation witness\n"
    "  certify --images <file>          verify a homomorphism, certify its kernel\n"
    "  companion <a1,a2,...>            twisted companion curve\n"
    "  realize <P> <e1,e2,e3> <a> <r>   polyhedral realization (P: C<n>, D<n>, A4, S4, A5)\n"
    "  arnold [--audit]                 strange-duality table, recomputed\n"
    "  dominance [--nmax N] [--amax N]  positive-chi dominance graph (default DOT)\n"
    "\n"
    "flags: --workers N, --max-degree N, --cap N, --audit, --help\n"
    "config file: key=value lines for max_group_order_cap, max_witness_degree,\n"
    "worker_count, output_format; flags win; ORB_WORKERS overrides worker_count.\n";

struct Config {
  std::uint64_t max_group_order_cap = default_group_order_cap;
  Point max_witness_degree = default_witness_degree_cap;
  unsigned worker_count = 0; // 0: machine parallelism
  std::string output_format = "text";
};

struct Parsed {
  std::string command;
  std::vector<std::string> positional;
  std::map<std::string, std::string> keyvals;
  std::map<std::string, std::string> flags; // boolean flags map to ""
};

bool flag_takes_value(const std::string& name) {
  static const char* valued[] = {"config", "format",  "workers", "max-degree",
                                 "cap",    "nmax",    "amax",    "images",
                                 "rank",   "degree",  "rank2",   "degree2"};
  for (const char* v : valued)
    if (name == v) return true;
  return false;
}

bool flag_is_boolean(const std::string& name) {
  return name == "audit" || name == "help";
}

Parsed parse_args(const std::vector<std::string>& args) {
  Parsed p;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok.rfind("--", 0) == 0) {
      std::string name = tok.substr(2);
      std::string value;
      auto eq = name.find('=');
      bool inline_value = eq != std::string::npos;
      if (inline_value) {
        value = name.substr(eq + 1);
        name = name.substr(0, eq);
      }
      if (flag_takes_value(name)) {
        if (!inline_value) {
          if (i + 1 >= args.size())
            throw UsageError("flag --" + name + " needs a value");
          value = args[++i];
        }
      } else if (flag_is_boolean(name)) {
        if (inline_value)
          throw UsageError("flag --" + name + " takes no value");
      } else {
        throw UsageError("unknown flag --" + name);
      }
      p.flags[name] = value;
      continue;
    }
    auto eq = tok.find('=');
    bool plain_key = eq != std::string::npos && eq > 0;
    for (std::size_t k = 0; plain_key && k < eq; ++k)
      plain_key = (tok[k] >= 'a' && tok[k] <= 'z') || tok[k] == '_';
    if (plain_key) {
      p.keyvals[tok.substr(0, eq)] = tok.substr(eq + 1);
      continue;
    }
    if (p.command.empty())
      p.command = tok;
    else
      p.positional.push_back(tok);
  }
  return p;
}

std::int64_t parse_i64(const std::string& s, const std::string& what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(what + " must be an integer, got '" + s + "'");
  return value;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
  return value;
}

Int parse_bigint(const std::string& s, const std::string& what) {
  std::size_t start = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size())
    throw UsageError(what + " must be an integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw UsageError(what + " must be an integer, got '" + s + "'");
  return Int(s);
}

std::vector<Weight> parse_weight_list(const std::string& s) {
  std::vector<Weight> weights;
  if (s.empty()) return weights;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string item =
        s.substr(pos, comma == std::string::npos ? comma : comma - pos);
    weights.push_back(parse_i64(item, "weight"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return weights;
}

WeightedCurve curve_from(const Parsed& p) {
  std::int64_t genus = 0;
  if (auto it = p.keyvals.find("g"); it != p.keyvals.end())
    genus = parse_i64(it->second, "genus");
  std::vector<Weight> weights;
  if (auto it = p.keyvals.find("w"); it != p.keyvals.end())
    weights = parse_weight_list(it->second);
  return WeightedCurve(genus, std::move(weights));
}

void load_config_file(Config& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.empty() || body[0] == '#') continue;
    auto eq = body.find('=');
    if (eq == std::string::npos)
      throw DomainError("config line " + std::to_string(line_no) +
                        ": expected key=value");
    std::string key = body.substr(0, eq);
    std::string value = body.substr(eq + 1);
    auto as_u64 = [&](const char* what) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || ptr != value.data() + value.size())
        throw DomainError(std::string("config: ") + what +
                          " must be an integer, got '" + value + "'");
      return v;
    };
    if (key == "max_group_order_cap") {
      config.max_group_order_cap = as_u64(key.c_str());
      if (config.max_group_order_cap < 1)
        throw DomainError("config: max_group_order_cap must be >= 1");
    } else if (key == "max_witness_degree") {
      std::uint64_t v = as_u64(key.c_str());
      if (v < 1 || v > 1'000'000)
        throw DomainError("config: max_witness_degree out of range");
      config.max_witness_degree = static_cast<Point>(v);
    } else if (key == "worker_count") {
      config.worker_count = static_cast<unsigned>(as_u64(key.c_str()));
    } else if (key == "output_format") {
      if (value != "text" && value != "json" && value != "dot")
        throw DomainError("config: output_format must be text, json or dot");
      config.output_format = value;
    } else {
      throw DomainError("config: unknown key '" + key + "'");
    }
  }
}

Config resolve_config(const Parsed& p) {
  Config config;
  if (auto it = p.flags.find("config"); it != p.flags.end())
    load_config_file(config, it->second);
  if (const char* env = std::getenv("ORB_WORKERS")) {
    std::string s(env);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("ORB_WORKERS must be a nonnegative integer");
    config.worker_count = static_cast<unsigned>(v);
  }
  if (auto it = p.flags.find("workers"); it != p.flags.end())
    config.worker_count =
        static_cast<unsigned>(parse_u64(it->second, "--workers"));
  if (auto it = p.flags.find("max-degree"); it != p.flags.end()) {
    std::uint64_t v = parse_u64(it->second, "--max-degree");
    if (v < 1) throw UsageError("--max-degree must be >= 1");
    config.max_witness_degree = static_cast<Point>(v);
  }
  if (auto it = p.flags.find("cap"); it != p.flags.end()) {
    config.max_group_order_cap = parse_u64(it->second, "--cap");
    if (config.max_group_order_cap < 1) throw UsageError("--cap must be >= 1");
  }
  if (auto it = p.flags.find("format"); it != p.flags.end()) {
    if (it->second != "text" && it->second != "json" && it->second != "dot")
      throw UsageError("--format must be text, json or dot");
    config.output_format = it->second;
  }
  return config;
}

nlohmann::json json_envelope(const char* kind) {
  nlohmann::json j;
  j["schema_version"] = json_schema_version;
  j["tool_version"] = version;
  j["kind"] = kind;
  return j;
}

void emit(std::ostream& out, const Config& config, const std::string& text,
          const nlohmann::json& j) {
  if (config.output_format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

std::vector<Permutation> parse_perm_operands(
    const std::vector<std::string>& operands, std::size_t at_least) {
  if (operands.size() < at_least)
    throw UsageError("expected at least " + std::to_string(at_least) +
                     " permutation(s)");
  std::vector<Permutation> perms;
  perms.reserve(operands.size());
  for (const auto& s : operands) perms.push_back(Permutation::parse(s));
  return perms;
}

PolyhedralGroup parse_polyhedral(const std::string& spec) {
  if (spec.empty()) throw UsageError("empty polyhedral group");
  std::string body = spec;
  if (body == "A4") return PolyhedralGroup::platonic(3);
  if (body == "S4") return PolyhedralGroup::platonic(4);
  if (body == "A5") return PolyhedralGroup::platonic(5);
  char kind = body[0];
  std::string num = body.substr(body.size() > 1 && body[1] == '_' ? 2 : 1);
  if ((kind != 'C' && kind != 'D') || num.empty())
    throw UsageError("polyhedral group must be C<n>, D<n>, A4, S4 or A5; got '" +
                     spec + "'");
  Weight n = parse_i64(num, "polyhedral n");
  return kind == 'C' ? PolyhedralGroup::cyclic(n) : PolyhedralGroup::dihedral(n);
}

std::array<int, 3> parse_eps(const std::string& spec) {
  std::array<int, 3> eps{0, 0, 0};
  std::string digits;
  for (char c : spec)
    if (c != ',') digits.push_back(c);
  if (digits.size() != 3)
    throw UsageError("eps must be three 0/1 entries, e.g. 0,1,0");
  for (int i = 0; i < 3; ++i) {
    if (digits[i] != '0' && digits[i] != '1')
      throw UsageError("eps entries must be 0 or 1");
    eps[i] = digits[i] - '0';
  }
  return eps;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// --- subcommand bodies -----------------------------------------------------

int cmd_chi(const Parsed& p, const Config& config, std::ostream& out) {
  WeightedCurve curve = curve_from(p);
  Rational chi = euler_characteristic(curve);
  auto j = json_envelope("chi");
  j["label"] = curve.label();
  j["chi"] = chi.str();
  emit(out, config, chi.str() + "\n", j);
  return 0;
}

int cmd_classify(const Parsed& p, const Config& config, std::ostream& out) {
  WeightedCurve curve = curve_from(p);
  Trisection t = classify(curve);
  auto j = json_envelope("trisection");
  j["label"] = curve.label();
  j["class"] = to_string(t);
  j["chi"] = euler_characteristic(curve).str();
  emit(out, config, to_string(t) + "\n", j);
  return 0;
}

int cmd_k0(const Parsed& p, const Config& config, std::ostream& out) {
  WeightedCurve curve = curve_from(p);
  auto cls = [&](const char* rank_flag, const char* degree_flag) {
    K0Class c = structure_sheaf();
    if (auto it = p.flags.find(rank_flag); it != p.flags.end())
      c.rank = parse_bigint(it->second, rank_flag);
    if (auto it = p.flags.find(degree_flag); it != p.flags.end())
      c.degree = parse_bigint(it->second, degree_flag);
    return c;
  };
  K0Class x = cls("rank", "degree"), y = cls("rank2", "degree2");
  Rational value = averaged_euler_form(curve, x, y);
  auto j = json_envelope("k0-pairing");
  j["label"] = curve.label();
  j["x"] = {{"rank", x.rank.str()}, {"degree", x.degree.str()}};
  j["y"] = {{"rank", y.rank.str()}, {"degree", y.degree.str()}};
  j["value"] = value.str();
  emit(out, config, value.str() + "\n", j);
  return 0;
}

int cmd_rh(const Parsed& p, const Config& config, std::ostream& out) {
  auto chi_it = p.keyvals.find("chi");
  auto order_it = p.keyvals.find("order");
  if (chi_it == p.keyvals.end() || order_it == p.keyvals.end())
    throw UsageError("rh needs chi=<p/q> and order=<n>");
  Rational chi = Rational::parse(chi_it->second);
  Int order = parse_bigint(order_it->second, "order");
  Rational q = riemann_hurwitz_chi(chi, order);
  auto j = json_envelope("riemann-hurwitz");
  j["chi_cover"] = chi.str();
  j["order"] = order.str();
  j["chi_quotient"] = q.str();
  emit(out, config, q.str() + "\n", j);
  return 0;
}

int cmd_hurwitz(const Parsed& p, const Config& config, std::ostream& out) {
  auto it = p.keyvals.find("chi");
  if (it == p.keyvals.end()) throw UsageError("hurwitz needs chi=<even int>");
  Rational chi = Rational::parse(it->second);
  Int bound = hurwitz_bound(chi);
  auto j = json_envelope("hurwitz-bound");
  j["chi"] = chi.str();
  j["bound"] = bound.str();
  emit(out, config, bound.str() + "\n", j);
  return 0;
}

int cmd_genus(const Parsed& p, const Config& config, std::ostream& out) {
  auto it = p.keyvals.find("chi");
  if (it == p.keyvals.end()) throw UsageError("genus needs chi=<even int>");
  Rational chi = Rational::parse(it->second);
  Int g = chi_to_genus(chi);
  auto j = json_envelope("genus");
  j["chi"] = chi.str();
  j["genus"] = g.str();
  emit(out, config, g.str() + "\n", j);
  return 0;
}

int cmd_triangle_order(const Parsed& p, const Config& config,
                       std::ostream& out) {
  if (p.positional.size() != 3)
    throw UsageError("triangle-order needs three weights");
  Weight a = parse_i64(p.positional[0], "a");
  Weight b = parse_i64(p.positional[1], "b");
  Weight c = parse_i64(p.positional[2], "c");
  Int n = spherical_triangle_group_order(a, b, c);
  auto j = json_envelope("triangle-group-order");
  j["weights"] = {a, b, c};
  j["order"] = n.str();
  emit(out, config, n.str() + "\n", j);
  return 0;
}

int cmd_lcm(const Parsed& p, const Config& config, std::ostream& out) {
  WeightedCurve curve = curve_from(p);
  Int l = weight_lcm(curve);
  auto j = json_envelope("weight-lcm");
  j["label"] = curve.label();
  j["lcm"] = l.str();
  emit(out, config, l.str() + "\n", j);
  return 0;
}

int cmd_perm(const Parsed& p, const Config& config, std::ostream& out) {
  if (p.positional.empty())
    throw UsageError("perm needs a subcommand: order, mul, group-order, simple");
  const std::string& sub = p.positional[0];
  std::vector<std::string> operands(p.positional.begin() + 1,
                                    p.positional.end());
  if (sub == "order") {
    auto perms = parse_perm_operands(operands, 1);
    if (perms.size() != 1) throw UsageError("perm order takes one permutation");
    Int n = perms[0].order();
    auto j = json_envelope("perm-order");
    j["perm"] = perms[0].str();
    j["order"] = n.str();
    emit(out, config, n.str() + "\n", j);
    return 0;
  }
  if (sub == "mul") {
    auto perms = parse_perm_operands(operands, 2);
    Permutation product = perms[0];
    for (std::size_t i = 1; i < perms.size(); ++i) product = product * perms[i];
    auto j = json_envelope("perm-product");
    j["product"] = product.str();
    emit(out, config, product.str() + "\n", j);
    return 0;
  }
  if (sub == "group-order") {
    auto perms = parse_perm_operands(operands, 1);
    Int n = group_order(perms, config.max_group_order_cap);
    auto j = json_envelope("group-order");
    j["order"] = n.str();
    emit(out, config, n.str() + "\n", j);
    return 0;
  }
  if (sub == "simple") {
    auto perms = parse_perm_operands(operands, 1);
    PermGroup group(perms);
    bool simple = is_simple(group, config.max_group_order_cap);
    auto j = json_envelope("simplicity");
    j["order"] = group.order().str();
    j["simple"] = simple;
    emit(out, config, bool_str(simple) + "\n", j);
    return 0;
  }
  throw UsageError("unknown perm subcommand '" + sub + "'");
}

int cmd_presentation(const Parsed& p, const Config& config, std::ostream& out) {
  WeightedCurve curve = curve_from(p);
  OrbifoldPresentation pres(curve);
  auto j = json_envelope("presentation");
  j["label"] = curve.label();
  j["genus"] = pres.genus();
  j["weights"] = pres.weights();
  j["relations"] = pres.relation_count();
  j["text"] = pres.str();
  emit(out, config, pres.str() + "\n", j);
  return 0;
}

nlohmann::json witness_json(const TriangleWitness& w) {
  auto j = json_envelope("triangle-witness");
  j["weights"] = {w.a, w.b, w.c};
  j["degree"] = w.degree;
  j["c1"] = w.c1.str();
  j["c2"] = w.c2.str();
  j["c3"] = w.c3.str();
  return j;
}

std::string witness_text(const TriangleWitness& w) {
  std::string out;
  out += "degree = " + std::to_string(w.degree) + "\n";
  out += "c1 = " + w.c1.str() + "\n";
  out += "c2 = " + w.c2.str() + "\n";
  out += "c3 = " + w.c3.str() + "\n";
  return out;
}

int cmd_witness(const Parsed& p, const Config& config, std::ostream& out) {
  if (p.positional.size() != 3)
    throw UsageError("witness needs three weights");
  Weight a = parse_i64(p.positional[0], "a");
  Weight b = parse_i64(p.positional[1], "b");
  Weight c = parse_i64(p.positional[2], "c");
  TriangleWitness w = fox_witness_search(a, b, c, config.max_witness_degree,
                                         config.worker_count);
  emit(out, config, witness_text(w), witness_json(w));
  return 0;
}

std::string certificate_text(const WitnessCertificate& cert) {
  std::string out;
  out += "presentation = " + cert.presentation.str() + "\n";
  out += "index = " + cert.image_group_order.str() + "\n";
  out += "torsionfree = " + bool_str(cert.torsionfree) + "\n";
  out += "normal = " + bool_str(cert.normal) + "\n";
  return out;
}

int cmd_certify(const Parsed& p, const Config& config, std::ostream& out) {
  auto it = p.flags.find("images");
  if (it == p.flags.end()) throw UsageError("certify needs --images <file>");
  auto [pres, images] = parse_homomorphism_json(read_file(it->second));
  WitnessCertificate cert = certify_torsionfree_kernel(
      pres, images, config.max_group_order_cap, OrderBackend::BfsThenChain);
  if (config.output_format == "json") {
    out << certificate_to_json(cert);
    return 0;
  }
  out << certificate_text(cert);
  return 0;
}

int cmd_companion(const Parsed& p, const Config& config, std::ostream& out) {
  std::vector<Weight> weights;
  if (auto it = p.keyvals.find("w"); it != p.keyvals.end())
    weights = parse_weight_list(it->second);
  else if (p.positional.size() == 1)
    weights = parse_weight_list(p.positional[0]);
  else
    throw UsageError("companion needs a weight list, e.g. companion 2,6,6");
  CompanionCurve c = twisted_companion(weights);
  std::string degrees, sources;
  for (std::size_t i = 0; i < c.degrees.size(); ++i) {
    if (i) {
      degrees += ",";
      sources += ",";
    }
    degrees += c.degrees[i].str();
    sources += std::to_string(c.source_weights[i]);
  }
  std::string text;
  text += "source = [" + sources + "]\n";
  text += "lcm = " + c.lcm.str() + "\n";
  text += "degrees = [" + degrees + "]\n";
  text += "deck_order = " + c.group_order.str() + "\n";
  text += "chi = " + c.chi.str() + "\n";
  text += "smooth = " + bool_str(c.smooth) + "\n";
  if (c.genus) text += "genus = " + c.genus->str() + "\n";
  auto j = json_envelope("companion");
  j["source_weights"] = c.source_weights;
  j["lcm"] = c.lcm.str();
  auto& deg = j["degrees"] = nlohmann::json::array();
  for (const auto& d : c.degrees) deg.push_back(d.str());
  j["deck_order"] = c.group_order.str();
  j["chi"] = c.chi.str();
  j["smooth"] = c.smooth;
  if (c.genus)
    j["genus"] = c.genus->str();
  else
    j["genus"] = nullptr;
  emit(out, config, text, j);
  return 0;
}

int cmd_realize(const Parsed& p, const Config& config, std::ostream& out) {
  if (p.positional.size() != 4)
    throw UsageError("realize needs <P> <e1,e2,e3> <a> <r>");
  PolyhedralGroup part = parse_polyhedral(p.positional[0]);
  std::array<int, 3> eps = parse_eps(p.positional[1]);
  Weight a = parse_i64(p.positional[2], "a");
  Weight r = parse_i64(p.positional[3], "r");
  RealizationRecord rec = polyhedral_realize(part, eps, a, r);
  WeightedCurve quotient(0, rec.quotient_weights);
  std::string text;
  text += "quotient = " + quotient.label() + "\n";
  text += "group = " + rec.group_label + "\n";
  text += "group_order = " + rec.group_order.str() + "\n";
  text += "stable_set_size = " + std::to_string(rec.stable_set_size) + "\n";
  text += "chi_quotient = " + rec.chi_quotient.str() + "\n";
  text += "chi_cover = " + rec.chi_cover.str() + "\n";
  if (rec.genus_cover) text += "genus_cover = " + rec.genus_cover->str() + "\n";
  auto j = json_envelope("realization");
  j["quotient_weights"] = rec.quotient_weights;
  j["group"] = rec.group_label;
  j["group_order"] = rec.group_order.str();
  j["stable_set_size"] = rec.stable_set_size;
  j["chi_quotient"] = rec.chi_quotient.str();
  j["chi_cover"] = rec.chi_cover.str();
  if (rec.genus_cover)
    j["genus_cover"] = rec.genus_cover->str();
  else
    j["genus_cover"] = nullptr;
  emit(out, config, text, j);
  return 0;
}

int cmd_arnold(const Parsed& p, const Config& config, std::ostream& out) {
  bool audit = p.flags.count("audit") > 0;
  auto rows = arnold_table();
  if (config.output_format == "json") {
    out << arnold_to_json(rows, audit);
    return 0;
  }
  out << render_arnold_text(rows, audit);
  return 0;
}

int cmd_dominance(const Parsed& p, const Config& config, std::ostream& out) {
  Weight n_max = 12, a_max = 6;
  if (auto it = p.flags.find("nmax"); it != p.flags.end())
    n_max = parse_i64(it->second, "--nmax");
  if (auto it = p.flags.find("amax"); it != p.flags.end())
    a_max = parse_i64(it->second, "--amax");
  DominanceGraph g = build_positive_dominance(n_max, a_max);
  if (config.output_format == "json")
    out << emit_json(g);
  else
    out << emit_dot(g);
  return 0;
}

int dispatch(const Parsed& p, const Config& config, std::ostream& out) {
  if (config.output_format == "dot" && p.command != "dominance")
    throw UsageError("--format dot is only available for dominance");
  if (p.command == "chi") return cmd_chi(p, config, out);
  if (p.command == "classify") return cmd_classify(p, config, out);
  if (p.command == "k0") return cmd_k0(p, config, out);
  if (p.command == "rh") return cmd_rh(p, config, out);
  if (p.command == "hurwitz") return cmd_hurwitz(p, config, out);
  if (p.command == "genus") return cmd_genus(p, config, out);
  if (p.command == "triangle-order") return cmd_triangle_order(p, config, out);
  if (p.command == "lcm") return cmd_lcm(p, config, out);
  if (p.command == "perm") return cmd_perm(p, config, out);
  if (p.command == "presentation") return cmd_presentation(p, config, out);
  if (p.command == "witness") return cmd_witness(p, config, out);
  if (p.command == "certify") return cmd_certify(p, config, out);
  if (p.command == "companion") return cmd_companion(p, config, out);
  if (p.command == "realize") return cmd_realize(p, config, out);
  if (p.command == "arnold") return cmd_arnold(p, config, out);
  if (p.command == "dominance") return cmd_dominance(p, config, out);
  throw UsageError("unknown command '" + p.command + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    Parsed p = parse_args(args);
    if (p.flags.count("help") || p.command == "help") {
      out << usage_text;
      return 0;
    }
    if (p.command.empty()) {
      err << usage_text;
      return 64;
    }
    Config config = resolve_config(p);
    return dispatch(p, config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << usage_text;
    return 64;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace orbicurve::cli
