#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "prenichols/errors.hpp"
#include "prenichols/hilbert.hpp"
#include "prenichols/io.hpp"
#include "prenichols/verify.hpp"

#ifndef PRENICHOLS_VERSION
#define PRENICHOLS_VERSION "0.0.0"
#endif

using namespace prenichols;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kParse = 2, kInfinite = 3, kCap = 4 };

struct Input {
  std::string source;  // file contents or catalog name, hashed into reports
  LoadedInput loaded;
  std::optional<CatalogEntry> entry;
};

struct Globals {
  std::optional<std::size_t> cap_words;
  std::optional<std::size_t> cap_length;
};

Input resolve(const std::string& arg, const Globals& g) {
  std::string source = arg;
  std::optional<CatalogEntry> entry;
  InputDocument doc;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    std::stringstream ss;
    ss << f.rdbuf();
    source = ss.str();
    json j;
    try {
      j = json::parse(source);
    } catch (const json::parse_error& e) {
      throw ParseError(arg + ": " + e.what());
    }
    doc = parse_input_document(j);
  } else {
    entry = catalog_lookup(arg);
    doc = document_from_entry(*entry);
  }
  if (g.cap_words) doc.caps.max_words = g.cap_words;
  if (g.cap_length) doc.caps.max_length = g.cap_length;
  return Input{source, load_input(doc), std::move(entry)};
}

void write_json(const json& j, const std::string& out) {
  if (out == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) throw ValidationError("cannot write " + out);
  f << j.dump(2) << "\n";
}

json envelope(const CheckReport& r, const Input& in) {
  json j = to_json(r);
  j["tool_version"] = PRENICHOLS_VERSION;
  j["input_hash"] = fnv1a_hex(in.source);
  return j;
}

int emit(const CheckReport& r, const Input& in, const std::string& json_out) {
  if (json_out == "-") {
    write_json(envelope(r, in), json_out);
    return r.passed ? kPass : kFail;
  }
  std::cout << r.check << (r.label.empty() ? "" : " [" + r.label + "]") << ": " << (r.passed ? "PASS" : "FAIL") << " ("
            << static_cast<long long>(r.runtime_ms) << " ms)\n";
  if (!r.params.empty()) std::cout << "params: " << r.params.dump() << "\n";
  if (!r.data.empty()) std::cout << "data: " << r.data.dump(2) << "\n";
  if (r.witness) std::cout << "witness: " << *r.witness << "\n";
  if (!json_out.empty()) write_json(envelope(r, in), json_out);
  return r.passed ? kPass : kFail;
}

std::shared_ptr<QuotientView> presentation(const Input& in) {
  RelationSet rels = in.loaded.relations.value_or(RelationSet{});
  return QuotientView::prenichols(in.loaded.braiding, rels, in.loaded.quotient_caps);
}

IntVector parse_root(const std::string& text, int theta) {
  IntVector v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      v.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw ParseError("root must be a comma-separated list of integers");
    }
  }
  if (v.size() != static_cast<std::size_t>(theta)) throw ParseError("root has the wrong number of coordinates");
  return v;
}

int vertex(int one_based, int theta, const char* what) {
  if (one_based < 1 || one_based > theta) throw DomainError(std::string(what) + " must be in 1.." + std::to_string(theta));
  return one_based - 1;
}

void print_analysis(const RootSystemReport& r) {
  std::cout << "theta: " << r.theta << "\ncartan matrix:\n";
  for (int i = 0; i < r.cartan_matrix.size(); ++i) {
    std::cout << " ";
    for (int k = 0; k < r.cartan_matrix.size(); ++k) std::cout << " " << r.cartan_matrix.at(i, k);
    std::cout << "\n";
  }
  std::cout << "positive roots (" << r.roots.size() << "):\n";
  for (const auto& root : r.roots)
    std::cout << "  " << to_string(root.beta) << "  chi = " << root.self_braiding.to_string()
              << "  N = " << (root.height ? std::to_string(*root.height) : "inf") << (root.cartan ? "  cartan" : "")
              << "\n";
  std::cout << "longest word:";
  for (int v : r.longest_word) std::cout << " " << v + 1;
  std::cout << "\ngroupoid: " << r.groupoid_object_count << " objects, " << r.groupoid_morphism_count
            << " morphisms\ncartan roots: " << r.cartan_count() << "\ngk dimensions: (" << r.gk_dims[0] << ", "
            << r.gk_dims[1] << ", " << r.gk_dims[2] << ")\n";
}

struct VerifyOptions {
  std::string check;
  std::string input = "br25-V";
  std::string json_out;
  std::optional<int> i, j, n, k, l, rank_degree;
  int m = 2, degree = 6;
  std::string root;
  std::string probe = "1";
  bool power = false;
};

int run_verify(const VerifyOptions& o, const Globals& g) {
  const Input in = resolve(o.input, g);
  const BraidingMatrix& b = in.loaded.braiding;
  const int theta = b.theta();
  auto pbw_setup = [&](std::shared_ptr<QuotientView>& q) {
    q = presentation(in);
    const RootSystemReport rep = positive_roots(b, in.loaded.root_caps);
    std::map<IntVector, Recipe> over = in.loaded.recipes;
    return make_pbw_spec(rep, b, default_recipes(rep, *q, over));
  };
  auto root_power = [&](const PBWSpec& spec, std::int64_t& n) {
    if (o.root.empty()) throw ParseError(o.check + " needs --root");
    const IntVector beta = parse_root(o.root, theta);
    const auto it = std::find(spec.roots.begin(), spec.roots.end(), beta);
    if (it == spec.roots.end()) throw DomainError(o.root + " is not a positive root");
    const std::size_t idx = static_cast<std::size_t>(it - spec.roots.begin());
    if (o.n) n = *o.n;
    else if (spec.heights[idx]) n = *spec.heights[idx];
    else throw DomainError("root of infinite height needs --N");
    return spec.recipes[idx].expand(b);
  };

  const std::string& c = o.check;
  if (c == "power-coproduct")
    return emit(check_power_coproduct(b, vertex(o.i.value_or(1), theta, "--i"), o.n.value_or(1)), in, o.json_out);
  if (c == "adjoint-coproducts")
    return emit(check_adjoint_coproducts(b, vertex(o.i.value_or(1), theta, "--i"), vertex(o.j.value_or(2), theta, "--j"),
                                         o.n.value_or(2)), in,
                o.json_out);
  if (c == "frakR-generators")
    return emit(check_frak_r_generators(b, vertex(o.i.value_or(1), theta, "--i"), vertex(o.j.value_or(2), theta, "--j"), o.m), in, o.json_out);
  if (c == "symmetric-character") return emit(check_symmetric_character(b), in, o.json_out);
  if (c == "qcommute-powers" || c == "derivations-vanish") {
    std::shared_ptr<QuotientView> q;
    const PBWSpec spec = pbw_setup(q);
    std::int64_t n = 0;
    const FreeElem e = root_power(spec, n);
    if (c == "derivations-vanish") return emit(check_derivations_vanish(*q, e, n), in, o.json_out);
    return emit(check_qcommute_powers(*q, e, n, parse_element(o.probe, b.ctx(), theta)), in, o.json_out);
  }
  if (c == "left-coproduct" || c == "straightening" || c == "pbw-count") {
    std::shared_ptr<QuotientView> q;
    const PBWSpec spec = pbw_setup(q);
    PBWExpander ex(spec, *q);
    const int count = static_cast<int>(spec.roots.size());
    if (c == "left-coproduct")
      return emit(check_left_coproduct_structure(ex, static_cast<std::size_t>(vertex(o.k.value_or(1), count, "--k"))), in, o.json_out);
    if (c == "straightening")
      return emit(verify_straightening(ex, static_cast<std::size_t>(vertex(o.k.value_or(1), count, "--k")),
                                       static_cast<std::size_t>(vertex(o.l.value_or(2), count, "--l"))),
                  in, o.json_out);
    return emit(check_pbw_count(ex, o.degree, o.rank_degree.value_or(o.degree)), in, o.json_out);
  }
  if (c == "super-a") {
    static const std::regex re("super-a-(\\d+)-(\\d+)(?:-m(\\d+))?");
    std::smatch mt;
    if (!in.entry || !std::regex_match(in.entry->name, mt, re))
      throw ValidationError("super-a needs a super-a-<theta>-<n>[-m<vertices>] catalog name");
    std::vector<int> marked;
    for (char ch : mt[3].str()) marked.push_back(ch - '0');
    return emit(check_super_a_coproduct(std::stoi(mt[1]), std::stoi(mt[2]), marked, o.j.value_or(1), o.k.value_or(o.j.value_or(1) + 1),
                                        o.power,
                                        in.loaded.quotient_caps),
                in, o.json_out);
  }
  if (c == "br25-basic" || c == "br25-extended") {
    char variant = 0;
    if (b == br25('V').braiding) variant = 'V';
    if (b == br25('W').braiding) variant = 'W';
    if (!variant) throw ValidationError(c + " needs the br(2;5) braiding V or W");
    return emit(check_br25(variant, c == "br25-extended", in.loaded.quotient_caps), in, o.json_out);
  }
  throw ParseError("unknown check '" + c + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, Hilbert series and coproduct checks for pre-Nichols algebras of diagonal type"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap-words", g.cap_words, "Maximum number of words in one multidegree");
  app.add_option("--cap-length", g.cap_length, "Maximum longest-word length");
  app.set_version_flag("--version", PRENICHOLS_VERSION);

  std::string input, json_out;
  std::optional<std::size_t> max_objects;
  auto* analyze = app.add_subcommand("analyze", "Root system, Cartan roots and GK dimensions");
  analyze->add_option("input", input, "Input file or catalog name")->required();
  analyze->add_option("--json", json_out, "Write the report as JSON ('-' for stdout)");
  analyze->add_option("--max-objects", max_objects, "Cap on Weyl groupoid objects");

  std::int64_t degree = 6;
  std::string algebra = "prenichols";
  bool oracle = false;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients from the root data");
  hilbert->add_option("input", input, "Input file or catalog name")->required();
  hilbert->add_option("--degree", degree, "Total degree bound")->required();
  hilbert->add_option("--algebra", algebra, "nichols or prenichols")->check(CLI::IsMember({"nichols", "prenichols"}));
  hilbert->add_flag("--oracle", oracle, "Recompute every coefficient as a quotient dimension and compare");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run one executable check");
  verify->add_option("check", vo.check, "Check name")->required();
  verify->add_option("input", vo.input, "Input file or catalog name (default br25-V)");
  verify->add_option("--json", vo.json_out, "Write the report as JSON ('-' for stdout)");
  verify->add_option("--i", vo.i, "Vertex i (1-based)");
  verify->add_option("--j", vo.j, "Vertex j, or first index of E_{j,k} (1-based)");
  verify->add_option("--k", vo.k, "Root index k, or last index of E_{j,k} (1-based)");
  verify->add_option("--l", vo.l, "Root index l (1-based)");
  verify->add_option("--N", vo.n, "Power");
  verify->add_option("--m", vo.m, "Adjoint power m");
  verify->add_option("--root", vo.root, "Root as comma-separated coordinates");
  verify->add_option("--probe", vo.probe, "Probe element, e.g. \"12\"");
  verify->add_option("--degree", vo.degree, "Total degree bound");
  verify->add_option("--rank-degree", vo.rank_degree, "Total degree bound for the expansion-rank check");
  verify->add_flag("--power", vo.power, "super-a: check the power formula");

  int reflect_vertex = 0;
  std::string reflect_out = "-";
  auto* reflect = app.add_subcommand("reflect", "Reflected braiding as an input document");
  reflect->add_option("input", input, "Input file or catalog name")->required();
  reflect->add_option("-i", reflect_vertex, "Vertex (1-based)")->required();
  reflect->add_option("--out", reflect_out, "Output file ('-' for stdout)");

  std::string action, name;
  auto* catalog = app.add_subcommand("catalog", "Built-in braidings and presentations");
  catalog->add_option("action", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  catalog->add_option("name", name, "Entry name for show");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    if (*analyze) {
      const Input in = resolve(input, g);
      RootCaps caps = in.loaded.root_caps;
      if (max_objects) caps.max_objects = *max_objects;
      const RootSystemReport r = positive_roots(in.loaded.braiding, caps);
      if (json_out != "-") print_analysis(r);
      if (!json_out.empty()) {
        json j = to_json(r);
        j["tool_version"] = PRENICHOLS_VERSION;
        j["input_hash"] = fnv1a_hex(in.source);
        write_json(j, json_out);
      }
      return kPass;
    }
    if (*hilbert) {
      const Input in = resolve(input, g);
      const BraidingMatrix& b = in.loaded.braiding;
      const bool nichols = algebra == "nichols";
      const RootSystemReport r = positive_roots(b, in.loaded.root_caps);
      const HilbertSeries h = nichols ? nichols_hilbert(r, degree) : prenichols_hilbert(r, degree);
      std::shared_ptr<QuotientView> q;
      if (oracle) {
        if (nichols) q = QuotientView::nichols(b, in.loaded.quotient_caps);
        else if (in.loaded.relations) q = presentation(in);
        else throw ValidationError("--oracle for the pre-Nichols algebra needs relations in the input");
      }
      bool ok = true;
      for (const auto& delta : multidegrees_up_to(b.theta(), degree)) {
        const std::uint64_t c = coefficient(h, delta);
        if (!q) {
          if (c != 0) std::cout << to_string(delta) << " " << c << "\n";
          continue;
        }
        const std::size_t dim = q->quotient_dim(delta);
        if (c == 0 && dim == 0) continue;
        std::cout << to_string(delta) << " " << c << " " << dim << (c == dim ? "" : "  MISMATCH") << "\n";
        ok = ok && c == dim;
      }
      return ok ? kPass : kFail;
    }
    if (*verify) return run_verify(vo, g);
    if (*reflect) {
      const Input in = resolve(input, g);
      const int v = vertex(reflect_vertex, in.loaded.braiding.theta(), "-i");
      write_json(to_json(document_from_braiding(reflect_object(in.loaded.braiding, v))), reflect_out);
      return kPass;
    }
    if (*catalog) {
      if (action == "list") {
        for (const auto& n : catalog_names()) std::cout << n << "  " << catalog_lookup(n).description << "\n";
        return kPass;
      }
      if (name.empty()) throw ParseError("catalog show needs a name");
      write_json(to_json(document_from_entry(catalog_lookup(name))), "-");
      return kPass;
    }
  } catch (const InfiniteTypeError& e) {
    std::cerr << "infinite type: " << e.what() << "\n";
    return kInfinite;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
