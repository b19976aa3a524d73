#include "mvpoly/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mvpoly {

std::string chamber_key(const RootSystem& rs, int chamber, bool subset_keys) {
  const Weight& v = rs.chamber(chamber).weight;
  if (subset_keys) {
    if (rs.cartan().family != Family::A) throw InvalidInput("subset keys are only defined for type A");
    return subset_key(weight_to_subset(v));
  }
  return to_string(v.coords);
}

Json group_json(const RootSystem& rs) {
  return Json{{"family", std::string(1, family_letter(rs.cartan().family))}, {"rank", rs.rank()}};
}

RootSystemPtr group_from_json(const Json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("family") || !j.contains("rank"))
    throw InvalidInput("group needs family and rank");
  if (!j["family"].is_string() || !j["rank"].is_number_integer()) throw InvalidInput("malformed group");
  return RootSystem::create(build_cartan(j["family"].get<std::string>(), j["rank"].get<int>()), limits);
}

Json polytope_document(const BZDatum& M, const DocumentOptions& opts) {
  const RootSystem& rs = *M.rs;
  Json doc;
  doc["group"] = group_json(rs);
  Json m = Json::object();
  for (int c = 0; c < rs.num_chamber_weights(); ++c) m[chamber_key(rs, c, opts.subset_keys)] = M[c];
  doc["M"] = m;
  doc["mu1"] = M.mu1().coords;
  doc["mu2"] = M.mu2().coords;
  bool edges = check_edge_inequalities(M).empty();
  bool tpr = check_tropical_pluecker(M).empty();
  doc["valid"] = edges && tpr;
  if (opts.with_vertices && edges) {
    Json vs = Json::array();
    auto mu = vertices(M);
    for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w)
      vs.push_back(Json{{"w", rs.element(w).word}, {"mu", mu[w].coords}});
    doc["vertices"] = vs;
  }
  if (!opts.lusztig_words.empty() && edges) {
    Json ld = Json::object();
    for (const Word& w : opts.lusztig_words) ld[to_string(IntVec(w.begin(), w.end()))] = lusztig_datum(M, w).n;
    doc["lusztig"] = ld;
  }
  return doc;
}

BZDatum parse_polytope_document(const Json& j, const Limits& limits) {
  if (!j.is_object()) throw InvalidInput("document must be a JSON object");
  if (!j.contains("group")) throw InvalidInput("document has no group");
  RootSystemPtr rs = group_from_json(j["group"], limits);
  if (!j.contains("M") || !j["M"].is_object()) throw InvalidInput("document has no M object");
  BZDatum M = zero_datum(rs);
  std::vector<char> seen(M.values.size(), 0);
  for (auto& [key, val] : j["M"].items()) {
    if (!val.is_number_integer()) throw InvalidInput("M values must be integers");
    std::optional<int> c;
    bool coord_style = key.find('-') != std::string::npos || key.find(',') != std::string::npos || rs->rank() == 1;
    if (coord_style) {
      IntVec v = parse_int_list(key);
      if (static_cast<int>(v.size()) != rs->rank()) throw InvalidInput("key '" + key + "' has the wrong length");
      c = rs->find_chamber(Weight{v});
    } else {
      if (rs->cartan().family != Family::A) throw InvalidInput("subset key '" + key + "' outside type A");
      c = rs->find_chamber(subset_to_weight(rs->rank() + 1, parse_subset_key(key)));
    }
    if (!c) throw InvalidInput("key '" + key + "' is not a chamber weight");
    if (seen[*c]) throw InvalidInput("chamber weight given twice: '" + key + "'");
    seen[*c] = 1;
    M.values[*c] = val.get<Int>();
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidInput("M misses some chamber weights");
  return M;
}

Json picture_json(const KostantPicture& p) {
  Json a = Json::array();
  for (auto& [r, v] : p.p) a.push_back(Json::array({r.first, r.second, v}));
  return a;
}

KostantPicture picture_from_json(int n, const Json& j) {
  if (!j.is_array()) throw InvalidInput("picture must be an array of [a,b,p] triples");
  KostantPicture p{n, {}};
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw InvalidInput("picture entries are [a,b,p] triples");
    for (auto& x : t)
      if (!x.is_number_integer()) throw InvalidInput("picture entries must be integers");
    int a = t[0].get<int>(), b = t[1].get<int>();
    Int v = t[2].get<Int>();
    if (a < 1 || b > n || a >= b) throw InvalidInput("bad root in picture");
    if (v < 0) throw InvalidInput("picture entries must be nonnegative");
    if (!p.p.emplace(Root{a, b}, v).second) throw InvalidInput("root given twice in picture");
  }
  if (static_cast<int>(p.p.size()) != n * (n - 1) / 2) throw InvalidInput("picture must cover every positive root");
  return p;
}

Json catalog_json(const PrimeCatalog& cat, bool subset_keys) {
  const RootSystem& rs = *cat.rs;
  Json doc;
  doc["group"] = group_json(rs);
  doc["reference_word"] = cat.reference;
  doc["choices"] = cat.cones.size();
  doc["maximal_cones"] = cat.maximal.size();
  Json cones = Json::array();
  for (int t : cat.maximal) {
    const ChoiceCone& cc = cat.cones[t];
    cones.push_back(Json{{"choice", cc.choice}, {"rays", cc.chart_rays.size()}, {"generators", cc.hilbert.size()}});
  }
  doc["cones"] = cones;
  Json primes = Json::array();
  for (auto& p : cat.primes) {
    Json m = Json::object();
    for (int c = 0; c < rs.num_chamber_weights(); ++c) m[chamber_key(rs, c, subset_keys)] = p.datum[c];
    primes.push_back(Json{{"label", p.label}, {"lusztig", p.lusztig}, {"mu2", p.datum.mu2().coords}, {"M", m}});
  }
  doc["primes"] = primes;
  Json cl = Json::array();
  for (auto& c : cat.clusters) {
    std::vector<std::string> labels;
    for (int p : c) labels.push_back(cat.primes[p].label);
    std::sort(labels.begin(), labels.end());
    std::string s;
    for (auto& l : labels) s += l;
    cl.push_back(s);
  }
  doc["clusters"] = cl;
  doc["warnings"] = cat.warnings;
  return doc;
}

IntVec parse_int_list(const std::string& s) {
  IntVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    long long x;
    try {
      x = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse integer list '" + s + "'");
    }
    while (pos < tok.size() && tok[pos] == ' ') ++pos;
    if (pos != tok.size()) throw InvalidInput("cannot parse integer list '" + s + "'");
    v.push_back(x);
  }
  if (v.empty()) throw InvalidInput("empty integer list");
  return v;
}

Word parse_word(const std::string& s) {
  IntVec v = parse_int_list(s);
  return Word(v.begin(), v.end());
}

}  // namespace mvpoly
