#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "liecoh/algebra_json.hpp"
#include "liecoh/closed_forms.hpp"
#include "liecoh/cochain.hpp"
#include "liecoh/families.hpp"
#include "liecoh/sampling.hpp"

namespace liecoh::cli {

using nlohmann::ordered_json;

namespace {

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnknownFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IOFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  LieAlgebra algebra;
  std::string name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOFailure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Scalar> parse_lambda(const std::vector<std::string>& values) {
  std::vector<Scalar> out;
  for (const auto& v : values) {
    try {
      out.push_back(Scalar::parse(v));
    } catch (const Error& e) {
      throw BadInput(std::string("--lambda: ") + e.what());
    }
  }
  return out;
}

std::string lambda_str(const std::vector<Scalar>& lambda) {
  std::string s;
  for (const auto& l : lambda) s += (s.empty() ? "" : ", ") + l.str();
  return "(" + s + ")";
}

std::vector<std::string> dual_names(const LieAlgebra& g) {
  if (!g.dual_labels().empty()) return g.dual_labels();
  if (g.labels().empty()) return default_dual_names(g.dim());
  std::vector<std::string> names;
  for (int i = 0; i < g.dim(); ++i) names.push_back(g.label(i) + "*");
  return names;
}

Loaded load_algebra(const RunConfig& c) {
  if (c.family.has_value() == c.input_path.has_value())
    throw BadInput("exactly one of --family or --input is required");
  try {
    if (c.input_path) return {algebra_from_json(read_file(*c.input_path)), *c.input_path};

    Loaded l{abelian(0), ""};
    const std::string& f = *c.family;
    if (f == "aff") {
      l = {aff_r(), "aff(R)"};
    } else if (f == "heisenberg") {
      if (c.m < 1) throw BadInput("--m must be >= 1");
      l = {heisenberg(c.m), "h_" + std::to_string(2 * c.m + 1)};
    } else if (f == "abelian") {
      if (c.d < 0) throw BadInput("--d must be >= 0");
      l = {abelian(c.d), "R^" + std::to_string(c.d)};
    } else if (f == "diamond") {
      auto lambda = parse_lambda(c.lambda);
      if (lambda.empty()) throw BadInput("diamond needs at least one --lambda");
      l = {diamond(lambda).first, "D_" + std::to_string(2 * lambda.size() + 2) + lambda_str(lambda)};
    } else {
      throw UnknownFamily("unknown family '" + f + "' (expected aff, heisenberg, abelian, diamond)");
    }
    if (c.ext < 0) throw BadInput("--ext must be >= 0");
    if (c.ext > 0) {
      l.algebra = direct_sum(l.algebra, abelian(c.ext));
      l.name += " + R^" + std::to_string(c.ext);
    }
    return l;
  } catch (const Error& e) {
    throw BadInput(e.what());
  }
}

int require_degree(const RunConfig& c, const LieAlgebra& g) {
  if (!c.degree) throw BadInput("--degree is required for this command");
  if (*c.degree < 0 || *c.degree > g.dim())
    throw BadInput("--degree " + std::to_string(*c.degree) + " outside [0, " +
                   std::to_string(g.dim()) + "]");
  return *c.degree;
}

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

constexpr const char* kCsvHeader = "degree,binomial,rank_prev,rank,betti\n";

void csv_row(std::ostream& os, const BettiProfile& p, int k) {
  const auto ku = static_cast<std::size_t>(k);
  os << k << ',' << binom(p.n, k) << ',' << p.images[ku] << ',' << p.ranks[ku] << ',' << p.b[ku]
     << '\n';
}

ordered_json profile_json(const Loaded& l, const BettiProfile& p) {
  ordered_json j;
  j["name"] = l.name;
  j["dim"] = p.n;
  j["betti"] = p.b;
  j["ranks"] = p.ranks;
  j["kernels"] = p.kernels;
  j["images"] = p.images;
  j["algebra"] = ordered_json::parse(algebra_to_json(l.algebra));
  return j;
}

// Commands -------------------------------------------------------------------

int cmd_betti(const RunConfig& c, std::ostream& out) {
  Loaded l = load_algebra(c);
  const int k = require_degree(c, l.algebra);
  const BettiProfile p = betti_profile(l.algebra);
  const auto ku = static_cast<std::size_t>(k);
  switch (c.format) {
    case Format::Table:
      out << p.b[ku] << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["name"] = l.name;
      j["dim"] = p.n;
      j["degree"] = k;
      j["betti"] = p.b[ku];
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << kCsvHeader;
      csv_row(out, p, k);
      break;
  }
  return kOk;
}

int cmd_profile(const RunConfig& c, std::ostream& out) {
  Loaded l = load_algebra(c);
  const BettiProfile p = betti_profile(l.algebra);
  switch (c.format) {
    case Format::Table:
      out << "algebra: " << l.name << " (dim " << p.n << ")\n";
      out << std::left << std::setw(4) << "k" << std::setw(10) << "C(n,k)" << std::setw(14)
          << "rank d_{k-1}" << std::setw(12) << "rank d_k" << "b_k\n";
      for (int k = 0; k <= p.n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        out << std::setw(4) << k << std::setw(10) << binom(p.n, k) << std::setw(14) << p.images[ku]
            << std::setw(12) << p.ranks[ku] << p.b[ku] << '\n';
      }
      out << "betti: " << joined(p.b) << '\n';
      break;
    case Format::Json:
      out << profile_json(l, p).dump(2) << '\n';
      break;
    case Format::Csv:
      out << kCsvHeader;
      for (int k = 0; k <= p.n; ++k) csv_row(out, p, k);
      break;
  }
  return kOk;
}

int cmd_diamond_b2(const RunConfig& c, std::ostream& out) {
  if (c.family || c.input_path) throw BadInput("diamond-b2 takes --lambda values only");
  const auto lambda = parse_lambda(c.lambda);
  if (lambda.empty()) throw BadInput("diamond-b2 needs at least one --lambda");

  const bool all_nonzero =
      std::none_of(lambda.begin(), lambda.end(), [](const Scalar& s) { return s.is_zero(); });
  const std::uint64_t engine = betti(diamond(lambda).first, 2);
  std::optional<LambdaSpec> spec;
  std::optional<std::uint64_t> closed;
  if (all_nonzero) {
    spec = lambda_classes(lambda);
    closed = diamond_b2(*spec);
  } else {
    closed = diamond_b2_general(lambda);
  }

  switch (c.format) {
    case Format::Table:
      out << "lambda: " << lambda_str(lambda) << '\n';
      if (spec) {
        for (std::size_t i = 0; i < spec->classes.size(); ++i) {
          const auto& cl = spec->classes[i];
          out << "class " << i + 1 << ": a = " << cl.representative.str() << ", p = " << cl.p
              << ", q = " << cl.q << ", n = " << cl.size() << '\n';
        }
        out << "b2 (sum n_j^2 - 1) = " << *closed << '\n';
      } else {
        out << "zero entries split off an abelian summand\n";
        out << "b2 (reduced diamond + Kunneth) = " << *closed << '\n';
      }
      out << "b2 (engine) = " << engine << '\n';
      out << (engine == *closed ? "agree" : "DISAGREE") << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      std::vector<std::string> entries;
      for (const auto& l : lambda) entries.push_back(l.str());
      j["lambda"] = entries;
      if (spec) {
        ordered_json classes = ordered_json::array();
        for (const auto& cl : spec->classes) {
          ordered_json cj;
          cj["representative"] = cl.representative.str();
          cj["p"] = cl.p;
          cj["q"] = cl.q;
          cj["n"] = cl.size();
          classes.push_back(cj);
        }
        j["classes"] = classes;
      }
      j["b2_closed_form"] = *closed;
      j["b2_engine"] = engine;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "class,representative,p,q,n\n";
      if (spec)
        for (std::size_t i = 0; i < spec->classes.size(); ++i) {
          const auto& cl = spec->classes[i];
          out << i + 1 << ',' << '"' << cl.representative.str() << '"' << ',' << cl.p << ','
              << cl.q << ',' << cl.size() << '\n';
        }
      out << "b2_closed_form," << *closed << "\nb2_engine," << engine << '\n';
      break;
  }
  return engine == *closed ? kOk : kDisagreement;
}

int cmd_cocycles(const RunConfig& c, std::ostream& out) {
  Loaded l = load_algebra(c);
  const int k = require_degree(c, l.algebra);
  const auto names = dual_names(l.algebra);
  const auto cycles = cocycle_basis(l.algebra, k);
  const auto boundaries = coboundary_basis(l.algebra, k);
  const auto reps = cohomology_representatives(l.algebra, k);
  switch (c.format) {
    case Format::Table:
      out << "algebra: " << l.name << ", degree " << k << '\n';
      out << "dim Z = " << cycles.size() << ", dim B = " << boundaries.size()
          << ", b = " << reps.size() << '\n';
      out << "cocycles:\n";
      for (const auto& w : cycles) out << "  " << render(w, names) << '\n';
      out << "coboundaries:\n";
      for (const auto& w : boundaries) out << "  " << render(w, names) << '\n';
      out << "representatives:\n";
      for (const auto& w : reps) out << "  " << render(w, names) << '\n';
      break;
    case Format::Json:
    case Format::Csv: {
      auto strings = [&](const std::vector<ExteriorForm>& forms) {
        std::vector<std::string> s;
        for (const auto& w : forms) s.push_back(render(w, names));
        return s;
      };
      if (c.format == Format::Json) {
        ordered_json j;
        j["name"] = l.name;
        j["degree"] = k;
        j["names"] = names;
        j["cocycles"] = strings(cycles);
        j["coboundaries"] = strings(boundaries);
        j["representatives"] = strings(reps);
        out << j.dump(2) << '\n';
      } else {
        out << "kind,form\n";
        for (const auto& s : strings(cycles)) out << "cocycle,\"" << s << "\"\n";
        for (const auto& s : strings(boundaries)) out << "coboundary,\"" << s << "\"\n";
        for (const auto& s : strings(reps)) out << "representative,\"" << s << "\"\n";
      }
      break;
    }
  }
  return kOk;
}

int cmd_export_matrix(const RunConfig& c, std::ostream& out) {
  Loaded l = load_algebra(c);
  const int k = require_degree(c, l.algebra);
  const auto m = coboundary_matrix(l.algebra, k);
  switch (c.format) {
    case Format::Table:
      out << export_matrix(m);
      break;
    case Format::Json: {
      ordered_json j;
      j["k"] = m.k;
      j["rows"] = m.rows;
      j["cols"] = m.cols;
      ordered_json entries = ordered_json::array();
      for (const auto& [rc, v] : m.entries) entries.push_back({rc.first, rc.second, v.str()});
      j["entries"] = entries;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "row,col,value\n";
      for (const auto& [rc, v] : m.entries)
        out << rc.first << ',' << rc.second << ",\"" << v.str() << "\"\n";
      break;
  }
  return kOk;
}

// verify ---------------------------------------------------------------------

struct Check {
  std::string name;
  std::vector<std::uint64_t> expected;
  std::vector<std::uint64_t> engine;
  bool pass() const { return expected == engine; }
};

std::vector<std::uint64_t> engine_profile(const LieAlgebra& g) {
  const auto p = betti_profile(g);
  return {p.b.begin(), p.b.end()};
}

std::uint64_t resolve_seed(const RunConfig& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("LIECOH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw BadInput(std::string("LIECOH_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

std::vector<Check> grid_checks(std::uint64_t seed) {
  std::vector<Check> checks;

  for (int n = 2; n <= 10; ++n) {
    Check ch{"aff(R) + R^" + std::to_string(n - 2), {}, {}};
    for (int k = 0; k <= n; ++k) ch.expected.push_back(betti_aff_ext(n, k));
    ch.engine = engine_profile(n == 2 ? aff_r() : direct_sum(aff_r(), abelian(n - 2)));
    checks.push_back(std::move(ch));
  }

  for (int m = 1; m <= 4; ++m) {
    Check ch{"h_" + std::to_string(2 * m + 1), {}, {}};
    for (int k = 0; k <= 2 * m + 1; ++k) ch.expected.push_back(betti_heisenberg(m, k));
    ch.engine = engine_profile(heisenberg(m));
    checks.push_back(std::move(ch));
  }

  for (int m = 1; m <= 4; ++m)
    for (int n = 2 * m + 2; n <= 10; ++n) {
      const auto g = direct_sum(heisenberg(m), abelian(n - 2 * m - 1));
      const auto engine = engine_profile(g);
      Check closed{"h_" + std::to_string(2 * m + 1) + " + R^" + std::to_string(n - 2 * m - 1), {}, engine};
      for (int k = 0; k <= n; ++k) closed.expected.push_back(betti_heisenberg_ext(m, n, k));
      checks.push_back(std::move(closed));
    }

  // Künneth on mixed pairs.
  const std::vector<std::pair<std::string, LieAlgebra>> factors{
      {"aff(R)", aff_r()},
      {"h_3", heisenberg(1)},
      {"h_5", heisenberg(2)},
      {"D_4(1)", diamond({Scalar(1)}).first},
      {"R^1", abelian(1)}};
  for (std::size_t a = 0; a < factors.size(); ++a)
    for (std::size_t b = a; b < factors.size(); ++b) {
      const auto& [na, ga] = factors[a];
      const auto& [nb, gb] = factors[b];
      if (ga.dim() + gb.dim() > 10) continue;
      Check ch{"Kunneth " + na + " (+) " + nb,
               kunneth_convolution(engine_profile(ga), engine_profile(gb)),
               engine_profile(direct_sum(ga, gb))};
      checks.push_back(std::move(ch));
    }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto lambda = sample_lambda(rng, n);
    Check ch{"b2 D_" + std::to_string(2 * n + 2) + lambda_str(lambda),
             {diamond_b2(lambda_classes(lambda))},
             {betti(diamond(lambda).first, 2)}};
    checks.push_back(std::move(ch));
  }
  return checks;
}

std::vector<Check> profile_checks(const std::string& path) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(read_file(path));
  } catch (const ordered_json::parse_error& e) {
    throw BadInput("malformed profile JSON: " + std::string(e.what()));
  }
  std::vector<ordered_json> items;
  if (doc.is_array()) {
    for (auto& it : doc) items.push_back(it);
  } else {
    items.push_back(doc);
  }
  std::vector<Check> checks;
  for (const auto& item : items) {
    if (!item.is_object() || !item.contains("algebra") || !item.contains("betti"))
      throw BadInput("profile entries need 'algebra' and 'betti'");
    LieAlgebra g = abelian(0);
    try {
      g = algebra_from_json(item.at("algebra").dump());
    } catch (const Error& e) {
      throw BadInput(e.what());
    }
    Check ch{item.value("name", std::string("profile")), {}, engine_profile(g)};
    for (const auto& b : item.at("betti")) {
      if (!b.is_number_unsigned()) throw BadInput("'betti' must hold nonnegative integers");
      ch.expected.push_back(b.get<std::uint64_t>());
    }
    checks.push_back(std::move(ch));
  }
  return checks;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const bool from_file = c.profile_path.has_value();
  const std::uint64_t seed = from_file ? 0 : resolve_seed(c);
  const auto checks = from_file ? profile_checks(*c.profile_path) : grid_checks(seed);

  const Check* first_failure = nullptr;
  for (const auto& ch : checks)
    if (!ch.pass()) {
      first_failure = &ch;
      break;
    }
  const std::size_t passed = static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& ch) { return ch.pass(); }));

  switch (c.format) {
    case Format::Table:
      if (!from_file) out << "seed: " << seed << '\n';
      for (const auto& ch : checks)
        out << (ch.pass() ? "PASS " : "FAIL ") << ch.name << ": " << joined(ch.engine) << '\n';
      out << passed << "/" << checks.size() << " checks agree\n";
      if (first_failure)
        out << "first counterexample: " << first_failure->name << ": expected "
            << joined(first_failure->expected) << ", engine " << joined(first_failure->engine)
            << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      if (!from_file) j["seed"] = seed;
      ordered_json arr = ordered_json::array();
      for (const auto& ch : checks) {
        ordered_json cj;
        cj["name"] = ch.name;
        cj["pass"] = ch.pass();
        cj["expected"] = ch.expected;
        cj["engine"] = ch.engine;
        arr.push_back(cj);
      }
      j["checks"] = arr;
      j["passed"] = first_failure == nullptr;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "check,pass,expected,engine\n";
      for (const auto& ch : checks)
        out << '"' << ch.name << "\"," << (ch.pass() ? "true" : "false") << ",\""
            << joined(ch.expected) << "\",\"" << joined(ch.engine) << "\"\n";
      break;
  }
  return first_failure ? kDisagreement : kOk;
}

int dispatch(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::Betti: return cmd_betti(c, out);
    case Command::Profile: return cmd_profile(c, out);
    case Command::DiamondB2: return cmd_diamond_b2(c, out);
    case Command::Verify: return cmd_verify(c, out);
    case Command::Cocycles: return cmd_cocycles(c, out);
    case Command::ExportMatrix: return cmd_export_matrix(c, out);
  }
  return kBadInput;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.output_path) return dispatch(config, out);
    std::ostringstream buffer;
    const int status = dispatch(config, buffer);
    std::ofstream file(*config.output_path);
    if (!file) throw IOFailure("cannot write '" + *config.output_path + "'");
    file << buffer.str();
    if (!file) throw IOFailure("write to '" + *config.output_path + "' failed");
    return status;
  } catch (const UnknownFamily& e) {
    err << "error: " << e.what() << '\n';
    return kUnknownFamily;
  } catch (const IOFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIOFailure;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

std::optional<Command> parse_command(const std::string& name) {
  if (name == "betti") return Command::Betti;
  if (name == "profile") return Command::Profile;
  if (name == "diamond-b2") return Command::DiamondB2;
  if (name == "verify") return Command::Verify;
  if (name == "cocycles") return Command::Cocycles;
  if (name == "export-matrix") return Command::ExportMatrix;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

}  // namespace liecoh::cli
