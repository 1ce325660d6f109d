#include "kmcds/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "kmcds/errors.hpp"

namespace kmcds {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::uint64_t parse_u64(std::string_view s) {
  if (!all_digits(s)) throw Error("expected unsigned integer, got '" + std::string(s) + "'");
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error("integer out of range: '" + std::string(s) + "'");
  }
  return v;
}

/// Unbiased draw from [0, bound) using the raw engine output only, so results
/// do not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Micro Micro::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw Error("expected decimal number, got '" + std::string(text) + "'");
  if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
      (dot != std::string_view::npos && frac.empty() && whole.empty())) {
    throw Error("expected decimal number, got '" + std::string(text) + "'");
  }
  if (frac.size() > 6) throw Error("more than 6 fractional digits in '" + std::string(text) + "'");
  std::int64_t units = whole.empty() ? 0 : static_cast<std::int64_t>(parse_u64(whole)) * kScale;
  std::int64_t f = 0;
  for (std::size_t i = 0; i < 6; ++i) f = f * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  units += f;
  return Micro{negative ? -units : units};
}

Micro Micro::from_double(double v) {
  return Micro{static_cast<std::int64_t>(std::llround(v * static_cast<double>(kScale)))};
}

std::string Micro::str() const {
  std::int64_t a = units < 0 ? -units : units;
  std::string frac = std::to_string(a % kScale);
  frac.insert(0, 6 - frac.size(), '0');
  return (units < 0 ? "-" : "") + std::to_string(a / kScale) + "." + frac;
}

Weight parse_weight(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  Weight w;
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits) || !all_digits(den)) throw Error("malformed fraction '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error("zero denominator in '" + s + "'");
    w = mpq_class(n, d);
  } else {
    bool negative = false;
    std::string_view v = s;
    if (!v.empty() && v.front() == '-') {
      negative = true;
      v.remove_prefix(1);
    }
    auto dot = v.find('.');
    std::string whole(v.substr(0, dot));
    std::string frac = dot == std::string_view::npos ? "" : std::string(v.substr(dot + 1));
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw Error("malformed weight '" + s + "'");
    }
    mpz_class num(whole.empty() ? "0" : whole);
    mpz_class den = 1;
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    w = mpq_class(negative ? mpz_class(-num) : num, den);
  }
  w.canonicalize();
  return w;
}

std::string format_weight(const Weight& w) {
  mpz_class den = w.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1 || std::max(twos, fives) > 30) return w.get_str();
  int digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = w.get_num() * scale / w.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + s;
}

Weight total_weight(const std::vector<Weight>& w, const NodeSet& s) {
  Weight total = 0;
  for (NodeId v : s) total += w[v];
  return total;
}

WeightMode WeightMode::parse(std::string_view text) {
  if (text == "unit") return unit();
  constexpr std::string_view prefix = "uniform:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      Micro lo = Micro::parse(rest.substr(0, colon));
      Micro hi = Micro::parse(rest.substr(colon + 1));
      if (lo.units < 0 || hi < lo) throw Error("weight range must satisfy 0 <= lo <= hi");
      return uniform(lo, hi);
    }
  }
  throw Error("weight mode must be 'unit' or 'uniform:lo:hi', got '" + std::string(text) + "'");
}

void UnitDiskInstance::validate() const {
  if (radius.units <= 0) throw ValidationError("radius must be positive");
  if (width.units <= 0 || height.units <= 0) throw ValidationError("region sides must be positive");
  if (weights.size() != coords.size()) throw ValidationError("weight count differs from node count");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Point& p = coords[i];
    if (p.x.units < 0 || p.y.units < 0 || p.x > width || p.y > height) {
      throw ValidationError("node " + std::to_string(i) + " lies outside the region");
    }
    if (weights[i] < 0) throw ValidationError("node " + std::to_string(i) + " has negative weight");
  }
}

Graph build_unit_disk(const UnitDiskInstance& inst) {
  const std::size_t n = inst.size();
  const __int128 r = inst.radius.units;
  const __int128 r2 = r * r;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const __int128 dx = inst.coords[u].x.units - inst.coords[v].x.units;
      const __int128 dy = inst.coords[u].y.units - inst.coords[v].y.units;
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges, /*unit_disk=*/true);
}

UnitDiskInstance random_instance(std::size_t n, Micro width, Micro height, Micro radius,
                                 std::uint64_t seed, WeightMode mode) {
  UnitDiskInstance inst;
  inst.width = width;
  inst.height = height;
  inst.radius = radius;
  inst.seed = seed;
  if (width.units <= 0 || height.units <= 0 || radius.units <= 0) {
    throw ValidationError("region sides and radius must be positive");
  }
  std::mt19937_64 rng(seed);
  inst.coords.reserve(n);
  inst.weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Micro x{static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(width.units) + 1))};
    Micro y{static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(height.units) + 1))};
    inst.coords.push_back({x, y});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mode.kind == WeightMode::Kind::Unit) {
      inst.weights.emplace_back(1);
    } else {
      auto span = static_cast<std::uint64_t>(mode.hi.units - mode.lo.units) + 1;
      auto units = mode.lo.units + static_cast<std::int64_t>(uniform_below(rng, span));
      Weight w(mpz_class(std::to_string(units)), mpz_class(Micro::kScale));
      w.canonicalize();
      inst.weights.push_back(w);
    }
  }
  return inst;
}

void write_instance(std::ostream& os, const UnitDiskInstance& inst) {
  os << "udg v1\n";
  os << "n " << inst.size() << " radius " << inst.radius.str() << " region " << inst.width.str()
     << ' ' << inst.height.str() << " seed ";
  if (inst.seed) {
    os << *inst.seed;
  } else {
    os << '-';
  }
  os << '\n';
  for (std::size_t i = 0; i < inst.size(); ++i) {
    os << i << ' ' << inst.coords[i].x.str() << ' ' << inst.coords[i].y.str() << ' '
       << format_weight(inst.weights[i]) << '\n';
  }
}

UnitDiskInstance read_instance(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!tokenize(line).empty()) return true;
    }
    return false;
  };
  auto parse_at = [&](const Token& tok, auto&& fn) {
    try {
      return fn(tok.text);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, tok.column, e.what());
    }
  };

  if (!next_line()) throw ParseError(1, 1, "empty input, expected 'udg v1'");
  {
    auto toks = tokenize(line);
    if (toks.size() != 2 || toks[0].text != "udg" || toks[1].text != "v1") {
      throw ParseError(line_no, 1, "expected header 'udg v1'");
    }
  }
  if (!next_line()) throw ParseError(line_no + 1, 1, "missing parameter line");
  UnitDiskInstance inst;
  std::size_t n = 0;
  {
    auto toks = tokenize(line);
    static const char* keys[] = {"n", "radius", "region", "seed"};
    const std::size_t expected_tokens = 9;
    if (toks.size() != expected_tokens) {
      std::size_t col = toks.size() < expected_tokens ? line.size() + 1 : toks[expected_tokens].column;
      throw ParseError(line_no, col,
                       "expected 'n <n> radius <r> region <w> <h> seed <s|->'");
    }
    const std::size_t key_pos[] = {0, 2, 4, 7};
    for (std::size_t i = 0; i < 4; ++i) {
      if (toks[key_pos[i]].text != keys[i]) {
        throw ParseError(line_no, toks[key_pos[i]].column, std::string("expected keyword '") + keys[i] + "'");
      }
    }
    n = parse_at(toks[1], [](const std::string& s) { return static_cast<std::size_t>(parse_u64(s)); });
    inst.radius = parse_at(toks[3], [](const std::string& s) { return Micro::parse(s); });
    inst.width = parse_at(toks[5], [](const std::string& s) { return Micro::parse(s); });
    inst.height = parse_at(toks[6], [](const std::string& s) { return Micro::parse(s); });
    if (toks[8].text != "-") {
      inst.seed = parse_at(toks[8], [](const std::string& s) { return parse_u64(s); });
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) {
      throw ParseError(line_no + 1, 1,
                       "expected " + std::to_string(n) + " node lines, found " + std::to_string(i));
    }
    auto toks = tokenize(line);
    if (toks.size() != 4) {
      std::size_t col = toks.size() < 4 ? line.size() + 1 : toks[4].column;
      throw ParseError(line_no, col, "expected '<idx> <x> <y> <weight>'");
    }
    auto idx = parse_at(toks[0], [](const std::string& s) { return parse_u64(s); });
    if (idx != i) throw ParseError(line_no, toks[0].column, "node index out of order, expected " + std::to_string(i));
    Point p{parse_at(toks[1], [](const std::string& s) { return Micro::parse(s); }),
            parse_at(toks[2], [](const std::string& s) { return Micro::parse(s); })};
    inst.coords.push_back(p);
    inst.weights.push_back(parse_at(toks[3], [](const std::string& s) { return parse_weight(s); }));
  }
  if (next_line()) {
    throw ParseError(line_no, 1, "more node lines than n = " + std::to_string(n));
  }
  inst.validate();
  return inst;
}

void write_instance_file(const std::string& path, const UnitDiskInstance& inst) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  write_instance(os, inst);
  if (!os) throw Error("write to '" + path + "' failed");
}

UnitDiskInstance read_instance_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open '" + path + "'");
  return read_instance(is);
}

void write_node_set(std::ostream& os, const NodeSet& s) {
  for (NodeId v : s) os << v << '\n';
}

NodeSet read_node_set(std::istream& is, std::size_t universe) {
  NodeSet s(universe);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 1) throw ParseError(line_no, toks[1].column, "expected one index per line");
    std::uint64_t v;
    try {
      v = parse_u64(toks[0].text);
    } catch (const Error& e) {
      throw ParseError(line_no, toks[0].column, e.what());
    }
    if (v >= universe) throw ParseError(line_no, toks[0].column, "node index out of range");
    s.insert(static_cast<NodeId>(v));
  }
  return s;
}

namespace {

// Searches for `need` more pairwise non-adjacent nodes among `cand`.
bool has_independent(const Graph& g, NodeSet cand, std::size_t need) {
  if (need == 0) return true;
  if (cand.size() < need) return false;
  for (NodeId u : cand) {
    cand.erase(u);
    NodeSet rest = cand - g.neighbor_set(u);
    if (has_independent(g, rest, need - 1)) return true;
    if (cand.size() < need) return false;
  }
  return false;
}

}  // namespace

bool verify_kissing(const Graph& g) {
  for (NodeId v = 0; v < g.size(); ++v) {
    if (g.degree(v) < 6) continue;
    if (has_independent(g, g.neighbor_set(v), 6)) return false;
  }
  return true;
}

}  // namespace kmcds
