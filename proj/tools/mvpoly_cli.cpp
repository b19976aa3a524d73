// mvpoly: enumerate, count, decompose, collapse, draw and validate MV polytopes.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mvpoly/io.hpp"
#include "mvpoly/polytope.hpp"
#include "mvpoly/svg.hpp"

using namespace mvpoly;

namespace {

constexpr int kOk = 0, kCheckFailed = 1, kUsage = 2;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// One JSON value per non-blank line, or a single (possibly multi-line) value.
std::vector<Json> read_documents(const std::string& path) {
  std::string text = read_all(path);
  std::vector<Json> docs;
  try {
    std::stringstream ss(text);
    std::string line;
    bool lines_ok = true;
    while (std::getline(ss, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (!Json::accept(line)) {
        lines_ok = false;
        break;
      }
      docs.push_back(Json::parse(line));
    }
    if (!lines_ok) {
      docs.clear();
      docs.push_back(Json::parse(text));
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (docs.empty()) throw InvalidInput("no documents in input");
  return docs;
}

Coweight coweight_arg(const RootSystem& rs, const std::string& s, const char* name) {
  IntVec v = parse_int_list(s);
  if (static_cast<int>(v.size()) != rs.rank())
    throw InvalidInput(std::string(name) + " needs " + std::to_string(rs.rank()) + " coordinates");
  return Coweight{v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact MV polytope combinatorics"};
  app.require_subcommand(1);
  int rank_cap = 0, parallel = 1;
  app.add_option("--rank-cap", rank_cap, "Override the rank cap (also MVPOLY_RANK_CAP)");
  app.add_option("--parallel", parallel, "Worker threads for enumeration and cone processing")->check(CLI::PositiveNumber);

  std::string family, coweight, lambda, mu, nu, input = "-", out, face, picture;
  int rank = 0, n = 0, k = 0, index = 0;
  bool subset_keys = false, check_oracle = false, inject = false, canonical = false, verify = false;
  std::vector<std::string> words;

  auto* en = app.add_subcommand("enumerate", "All MV polytopes of a coweight, one JSON document per line");
  en->add_option("family", family)->required();
  en->add_option("rank", rank)->required();
  en->add_option("--coweight", coweight, "Coroot coordinates, e.g. 1,1")->required();
  en->add_flag("--subset-keys", subset_keys, "Key type-A chamber weights by subsets");
  en->add_option("--lusztig-word", words, "Attach the Lusztig datum for this reduced word");

  auto* mult = app.add_subcommand("mult", "Weight or tensor product multiplicity");
  std::string mode;
  mult->add_option("mode", mode, "weight or tensor")->required()->check(CLI::IsMember({"weight", "tensor"}));
  mult->add_option("family", family)->required();
  mult->add_option("rank", rank)->required();
  mult->add_option("--lambda", lambda)->required();
  mult->add_option("--mu", mu)->required();
  mult->add_option("--nu", nu);
  mult->add_flag("--canonical", canonical, "Use only the w0 s_i Lambda_i conditions");
  mult->add_flag("--check-oracle", check_oracle, "Compare with the Kostant / Steinberg formula");
  mult->add_flag("--inject-mismatch", inject)->group("");

  auto* pr = app.add_subcommand("primes", "Prime MV polytopes and clusters");
  pr->add_option("family", family)->required();
  pr->add_option("rank", rank)->required();
  pr->add_flag("--subset-keys", subset_keys);

  auto* co = app.add_subcommand("collapse", "Collapse a Kostant picture along k");
  co->add_option("n", n)->required();
  co->add_option("k", k)->required();
  co->add_option("--picture", picture, "JSON [[a,b,p],...] or a file holding it")->required();
  co->add_flag("--verify", verify, "Cross-check against the facet of the assembled polytope");

  auto* dr = app.add_subcommand("draw", "SVG of a polytope document");
  dr->add_option("--input", input, "Document file (default stdin)");
  dr->add_option("--out", out, "SVG file")->required();
  dr->add_option("--index", index, "Which document of a stream");
  dr->add_option("--face", face, "w,i,j: draw the face w<s_i,s_j>, w given as the canonical word id");

  auto* va = app.add_subcommand("validate", "Check polytope documents");
  va->add_option("--input", input, "Document file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Limits limits = default_limits();
  if (rank_cap > 0) limits.max_rank = rank_cap;
  Exec exec{parallel};

  try {
    if (*en) {
      auto rs = RootSystem::create(build_cartan(family, rank), limits);
      Coweight c = coweight_arg(*rs, coweight, "--coweight");
      DocumentOptions opts;
      opts.subset_keys = subset_keys;
      for (auto& w : words) {
        opts.lusztig_words.push_back(parse_word(w));
        rs->word_data(opts.lusztig_words.back());
      }
      if (!c.nonnegative()) return kOk;
      for (const BZDatum& M : enumerate_mv(rs, c, exec)) std::cout << polytope_document(M, opts).dump() << "\n";
      return kOk;
    }
    if (*mult) {
      auto rs = RootSystem::create(build_cartan(family, rank), limits);
      Coweight l = coweight_arg(*rs, lambda, "--lambda"), m = coweight_arg(*rs, mu, "--mu");
      Int value, oracle = 0;
      if (mode == "weight") {
        value = canonical ? weight_mult_canonical(rs, l, m, exec) : weight_mult_mv(rs, l, m, exec);
        if (check_oracle) oracle = kostant_mult_oracle(*rs, l, m);
      } else {
        if (nu.empty()) throw InvalidInput("tensor mode needs --nu");
        Coweight v = coweight_arg(*rs, nu, "--nu");
        value = canonical ? tensor_mult_canonical(rs, l, m, v, exec) : tensor_mult(rs, l, m, v, exec);
        if (check_oracle) oracle = steinberg_oracle(*rs, l, m, v);
      }
      if (inject) oracle += 1;
      std::cout << value << "\n";
      if (check_oracle && oracle != value) {
        std::cerr << "oracle mismatch: polytope count " << value << ", classical formula " << oracle << "\n";
        return kCheckFailed;
      }
      return kOk;
    }
    if (*pr) {
      auto rs = RootSystem::create(build_cartan(family, rank), limits);
      CatalogOptions opts;
      opts.exec = exec;
      PrimeCatalog cat = prime_catalog(rs, opts);
      for (auto& w : cat.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << catalog_json(cat, subset_keys).dump() << "\n";
      return kOk;
    }
    if (*co) {
      auto rs = special_linear(n, limits);
      std::string text = picture;
      if (!text.empty() && text.front() != '[') text = read_all(text);
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed picture JSON: ") + e.what());
      }
      KostantPicture p = picture_from_json(n, j);
      KostantPicture q = collapse(p, k);
      std::cout << picture_json(q).dump() << "\n";
      if (verify) {
        BZDatum M = from_lusztig(rs, picture_to_lusztig(*rs, p));
        CollapseCheck chk = verify_collapse(M, p, k);
        if (!chk.ok) {
          std::cerr << chk.reason << "\n";
          return kCheckFailed;
        }
      }
      return kOk;
    }
    if (*dr) {
      auto docs = read_documents(input);
      if (index < 0 || index >= static_cast<int>(docs.size())) throw InvalidInput("--index out of range");
      BZDatum M = parse_polytope_document(docs[index], limits);
      std::string svg;
      if (face.empty()) {
        svg = draw_polytope(M);
      } else {
        IntVec f = parse_int_list(face);
        if (f.size() != 3 || f[0] < 0 || f[0] >= static_cast<Int>(M.rs->order()))
          throw InvalidInput("--face needs w,i,j with a valid element id");
        svg = draw_face(M, static_cast<ElemId>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2]));
      }
      std::ofstream f(out);
      if (!f) throw InvalidInput("cannot write " + out);
      f << svg;
      return kOk;
    }
    if (*va) {
      auto docs = read_documents(input);
      bool all = true;
      for (auto& d : docs) {
        BZDatum M = parse_polytope_document(d, limits);
        Json rep;
        Json viol = Json::array();
        for (auto& e : check_edge_inequalities(M)) viol.push_back(e.describe(*M.rs));
        for (auto& p : check_tropical_pluecker(M)) viol.push_back(p.describe(*M.rs));
        rep["valid"] = viol.empty();
        rep["violations"] = viol;
        all = all && viol.empty();
        std::cout << rep.dump() << "\n";
      }
      return all ? kOk : kCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
