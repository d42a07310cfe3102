#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "specgraph/instance.hpp"

namespace specgraph {

/// Module from a spec document {"ring": {"modulus": N}, "module": {"invariant_factors": [...]}}.
/// Other top-level keys are ignored, so inspect output parses as well.
inline FinModule parse_module_spec(const nlohmann::json& j) {
  auto bad = [](const std::string& why) { return MalformedSpec("malformed module spec: " + why); };
  if (!j.is_object()) throw bad("expected a JSON object");
  if (!j.contains("ring") || !j["ring"].is_object()) throw bad("missing object \"ring\"");
  if (!j.contains("module") || !j["module"].is_object()) throw bad("missing object \"module\"");
  const auto& mod = j["ring"].value("modulus", nlohmann::json());
  if (!mod.is_number_unsigned()) throw bad("\"ring.modulus\" must be a non-negative integer");
  const auto& f = j["module"].value("invariant_factors", nlohmann::json());
  if (!f.is_array()) throw bad("\"module.invariant_factors\" must be an array");
  std::vector<u64> factors;
  for (const auto& d : f) {
    if (!d.is_number_unsigned()) throw bad("invariant factors must be non-negative integers");
    factors.push_back(d.get<u64>());
  }
  try {
    return FinModule(Ring(mod.get<u64>()), std::move(factors));
  } catch (const InvalidArgument& e) {
    throw bad(e.what());
  }
}

inline FinModule parse_module_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedSpec(std::string("malformed module spec: invalid JSON (") + e.what() + ")");
  }
  return parse_module_spec(j);
}

inline FinModule load_module_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedSpec("cannot read module spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_spec(buf.str());
}

/// Writes content next to path and renames it into place.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw InvalidArgument("cannot write '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline u64 parse_number(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidArgument("malformed " + what + " '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InvalidArgument("malformed " + what + " '" + s + "'");
  }
}

}  // namespace detail

/// Lattice index named by an enumeration index ("3") or by generator
/// tuples ("<1,0>+<0,2>" or the printed form "<(1,0),(0,2)>"; "<0>" is zero).
inline std::size_t parse_submodule(const SubmoduleLattice& lat, const std::string& token) {
  const std::string t = detail::trim(token);
  const FinModule& m = lat.module();
  if (t.empty()) throw InvalidArgument("empty submodule reference");
  if (t.front() != '<') {
    const u64 i = detail::parse_number(t, "submodule index");
    if (i >= lat.size())
      throw IndexOutOfRange("submodule index " + t + " is out of range: " + m.to_string() + " has " +
                            std::to_string(lat.size()) + " submodules");
    return static_cast<std::size_t>(i);
  }
  auto element = [&](const std::string& tuple, const std::string& context) -> Code {
    const auto coords = detail::split(tuple, ',');
    if (coords.size() == 1 && coords[0] == "0") return 0;
    if (coords.size() != m.rank())
      throw InvalidArgument("generator tuple '" + context + "' needs " + std::to_string(m.rank()) + " coordinates");
    std::vector<u64> v;
    for (std::size_t i = 0; i < coords.size(); ++i)
      v.push_back(detail::parse_number(coords[i], "coordinate") % m.invariant_factors()[i]);
    return m.encode(v);
  };
  std::vector<Code> gens;
  for (const std::string& part : detail::split(t, '+')) {
    if (part.size() < 2 || part.front() != '<' || part.back() != '>')
      throw InvalidArgument("malformed generator tuple '" + part + "'");
    const std::string inner = detail::trim(part.substr(1, part.size() - 2));
    if (inner.empty() || inner.front() != '(') {
      gens.push_back(element(inner, part));
      continue;
    }
    // Printed form: "<(1,0),(0,2)>", one parenthesised tuple per generator.
    std::size_t pos = 0;
    while (pos < inner.size()) {
      const std::size_t close = inner.find(')', pos);
      if (inner[pos] != '(' || close == std::string::npos)
        throw InvalidArgument("malformed generator tuple '" + part + "'");
      gens.push_back(element(inner.substr(pos + 1, close - pos - 1), part));
      pos = close + 1;
      while (pos < inner.size() && (inner[pos] == ',' || std::isspace(static_cast<unsigned char>(inner[pos])))) ++pos;
    }
  }
  return lat.index_of(span(m, gens));
}

/// Subset selector for a graph kind: "max", "spec" (zariski_spec only) or
/// a list of submodule references separated by ';' (indices may also be
/// separated by ','). Returns positions in Max(M), or in Spec(M) when
/// over_spec is set.
inline Bitset parse_subset(const Spectrum& s, const std::string& selector, bool over_spec) {
  const std::string sel = detail::trim(selector);
  if (sel == "max") return over_spec ? s.max_as_spec_subset(s.all_max()) : s.all_max();
  if (sel == "spec") {
    if (!over_spec) throw InvalidArgument("subset 'spec' is only valid for the spectrum graph (--kind zspec)");
    return s.all_spec();
  }
  Bitset t(over_spec ? s.spec().size() : s.max_spec().size());
  for (const std::string& piece : detail::split(sel, ';')) {
    std::vector<std::string> tokens = piece.rfind('<', 0) == 0 ? std::vector<std::string>{piece} : detail::split(piece, ',');
    for (const std::string& tok : tokens) {
      if (tok.empty()) continue;
      const std::size_t i = parse_submodule(s.lattice(), tok);
      if (over_spec) {
        if (!s.is_prime(i)) throw InvalidArgument("submodule " + std::to_string(i) + " is not prime");
        t.set(s.spec_position(i));
      } else {
        if (!s.is_maximal(i)) throw InvalidArgument("submodule " + std::to_string(i) + " is not maximal");
        t.set(s.max_position(i));
      }
    }
  }
  if (t.none()) throw EmptySubset("the subset selector '" + selector + "' names no submodule");
  return t;
}

inline constexpr std::size_t kMaxTopologyUniverse = 6;

/// Structural report of a module; its "ring" and "module" keys make it a
/// valid module spec.
inline nlohmann::json inspect_json(const ModuleData& d) {
  const Spectrum& s = d.spec();
  const SubmoduleLattice& lat = d.lattice();
  const FinModule& m = d.module();
  nlohmann::json j = module_json(m);
  j["schema_version"] = 1;
  j["description"] = m.to_string();
  j["order"] = m.order();
  j["exponent"] = m.exponent();
  j["krull_dimension"] = m.ring().krull_dimension();
  j["faithful"] = m.is_faithful();

  nlohmann::json subs = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    nlohmann::json e{{"index", i},
                     {"order", lat[i].order()},
                     {"generators", generators_string(m, lat[i])},
                     {"colon", lat.colon(i).to_string()},
                     {"maximal", s.is_maximal(i)},
                     {"prime", s.is_prime(i)}};
    if (s.is_prime(i)) e["witness_prime"] = s.spec()[s.spec_position(i)].prime;
    subs.push_back(std::move(e));
  }
  j["submodules"] = subs;
  j["max_spec"] = s.max_spec();
  nlohmann::json spec = nlohmann::json::array();
  for (const auto& w : s.spec()) spec.push_back({{"index", w.submodule}, {"prime", w.prime}});
  j["spec"] = spec;
  j["semi_maximal"] = s.semi_maximal_submodules();
  j["socle"] = lat.index_of(socle(m));
  j["rad"] = s.rad();
  j["nil_radical"] = nil_radical(m.ring()).to_string();
  j["nil_action_zero"] = nil_action_is_zero(m.ring(), m);
  j["max_surjective"] = s.is_max_surjective();
  j["natural_map_homeomorphism"] = s.is_natural_map_homeomorphism();
  j["spec_equals_max"] = s.spec_equals_max();
  j["prime_module"] = s.is_prime_module();

  auto as_indices = [&](const Bitset& b) {
    std::vector<std::size_t> out;
    b.for_each([&](std::size_t q) { out.push_back(s.max_spec()[q]); });
    return out;
  };
  nlohmann::json topo{{"closed_sets", nlohmann::json::array()}};
  for (const auto& c : s.closed_sets()) topo["closed_sets"].push_back(as_indices(c));
  const std::size_t k = s.max_spec().size();
  if (k > 0 && k <= kMaxTopologyUniverse) {
    nlohmann::json subsets = nlohmann::json::array();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Bitset t(k);
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) t.set(b);
      subsets.push_back({{"T", as_indices(t)},
                         {"closed", s.is_closed(t)},
                         {"irreducible", s.is_irreducible(t)},
                         {"connected", s.is_connected_subspace(t)}});
    }
    topo["subsets"] = subsets;
  }
  j["topology"] = topo;

  nlohmann::json ag = report_json(d.ag_report);
  ag["vertices"] = d.ag.vertices;
  j["annihilating_graph"] = ag;
  return j;
}

inline std::string inspect_text(const ModuleData& d) {
  const Spectrum& s = d.spec();
  const SubmoduleLattice& lat = d.lattice();
  const FinModule& m = d.module();
  std::ostringstream os;
  os << m.to_string() << ": order " << m.order() << ", exponent " << m.exponent() << ", " << lat.size()
     << " submodules\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    os << "  [" << i << "] " << generators_string(m, lat[i]) << "  order " << lat[i].order() << "  (N:M) = "
       << lat.colon(i).to_string();
    if (s.is_maximal(i)) os << "  maximal";
    if (s.is_prime(i)) os << "  prime(p=" << s.spec()[s.spec_position(i)].prime << ")";
    os << "\n";
  }
  os << "Max(M): " << nlohmann::json(s.max_spec()).dump() << "\n";
  os << "socle: [" << lat.index_of(socle(m)) << "]  rad(M): [" << s.rad() << "]\n";
  os << "Max-surjective: " << (s.is_max_surjective() ? "yes" : "no")
     << "  prime module: " << (s.is_prime_module() ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace specgraph
