#pragma once

// JSON documents for polytopes, pictures and prime catalogs.

#include <json.hpp>

#include "mvpoly/primes.hpp"
#include "mvpoly/sln.hpp"

namespace mvpoly {

using Json = nlohmann::json;

struct DocumentOptions {
  bool subset_keys = false;          // type A only
  std::vector<Word> lusztig_words;   // extra Lusztig data to attach
  bool with_vertices = true;
};

std::string chamber_key(const RootSystem& rs, int chamber, bool subset_keys);
Json group_json(const RootSystem& rs);
RootSystemPtr group_from_json(const Json& j, const Limits& limits = default_limits());

Json polytope_document(const BZDatum& M, const DocumentOptions& opts = {});
// Accepts both key styles. Throws InvalidInput on malformed documents.
BZDatum parse_polytope_document(const Json& j, const Limits& limits = default_limits());

Json picture_json(const KostantPicture& p);
KostantPicture picture_from_json(int n, const Json& j);

Json catalog_json(const PrimeCatalog& cat, bool subset_keys = false);

IntVec parse_int_list(const std::string& s);
Word parse_word(const std::string& s);

}  // namespace mvpoly
