// sasakicert: construct, verify, search and classify certificates.
//
// Exit codes: 0 verified / found, 1 rejected / not covered / failed re-check,
// 2 invalid input.

#include "sasaki/sasaki.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using sasaki::Json;

struct GlobalOptions {
  std::string json_in;
  std::string out;
  bool quiet = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw sasaki::InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw sasaki::InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

/// Writes to a temporary sibling and renames, so readers never see a partial file.
void emit(const GlobalOptions& g, const Json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = g.out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
  }
  std::filesystem::rename(tmp, g.out);
}

void note(const GlobalOptions& g, const std::string& line) {
  if (!g.quiet) std::cerr << line << "\n";
}

std::vector<sasaki::Integer> parse_list(const std::string& text, const std::string& what) {
  std::vector<sasaki::Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw sasaki::InvalidInput(what + ": expected a comma-separated list of positive integers");
    out.emplace_back(item);
  }
  if (out.empty()) throw sasaki::InvalidInput(what + ": empty list");
  return out;
}

struct ConstructOptions {
  std::string family;
  std::optional<int> n, N, s;
  std::optional<long long> m;
  std::string mlist;
};

sasaki::FamilyParams params_from_flags(const ConstructOptions& o) {
  auto need = [](const auto& v, const char* flag) {
    if (!v) throw sasaki::InvalidInput(std::string("missing ") + flag);
    return *v;
  };
  auto list = [&]() {
    if (o.mlist.empty()) throw sasaki::InvalidInput("missing --mlist");
    return parse_list(o.mlist, "--mlist");
  };
  if (o.family == "hirzebruch") {
    auto m = list();
    return sasaki::HirzebruchParams{need(o.n, "--n"), o.s.value_or(static_cast<int>(m.size())), m};
  }
  if (o.family == "cubic") {
    auto m = list();
    return sasaki::CubicParams{sasaki::Integer(need(o.m, "--m")), o.s.value_or(static_cast<int>(m.size())), m};
  }
  if (o.family == "elliptic") return sasaki::EllipticParams{need(o.N, "--N"), need(o.n, "--n")};
  if (o.family == "cp2_one") {
    auto m = list();
    return sasaki::Cp2OneParams{o.s.value_or(static_cast<int>(m.size())), m};
  }
  if (o.family == "cp2_two") return sasaki::Cp2TwoParams{list()};
  if (o.family == "cp2_three") return sasaki::Cp2ThreeParams{list()};
  throw sasaki::InvalidInput("unknown family '" + o.family + "'");
}

int run_construct(const GlobalOptions& g, const ConstructOptions& o) {
  sasaki::FamilyParams params = g.json_in.empty() ? params_from_flags(o) : sasaki::params_from_json(parse_json(read_input(g.json_in)));
  auto c = sasaki::construct(params);
  emit(g, sasaki::certificate_to_json(c.certificate, params, "construct"));
  std::string summary = std::string(sasaki::to_string(c.certificate.verdict)) + ": " + c.certificate.manifold;
  for (const auto& ch : c.certificate.checks)
    if (!ch.passed()) summary += "\n  failed " + ch.name + ": " + ch.detail;
  note(g, summary);
  return c.certificate.verified() ? 0 : 1;
}

int run_verify(const GlobalOptions& g) {
  auto doc = parse_json(read_input(g.json_in));
  auto r = sasaki::verify_document(doc);
  Json out = sasaki::certificate_to_json(r.certificate, r.params, "verify");
  Json mism = Json::array();
  for (const auto& m : r.mismatches) mism.push_back(m);
  out["reproduced"] = r.reproduced;
  out["mismatches"] = mism;
  emit(g, out);
  std::string summary = r.reproduced ? "checks reproduced" : "checks differ from the document";
  for (const auto& m : r.mismatches) summary += "\n  mismatch " + m;
  for (const auto& ch : r.certificate.checks)
    if (!ch.passed()) summary += "\n  failed " + ch.name + ": " + ch.detail;
  summary += std::string("\n") + sasaki::to_string(r.certificate.verdict);
  note(g, summary);
  return r.exit_code();
}

int run_search(const GlobalOptions& g, const std::string& target) {
  Json out = {{"schema_version", sasaki::kSchemaVersion}, {"command", "search"}};
  sasaki::SearchResult r;
  if (target.rfind("k=", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(target.substr(2), &used);
      if (used != target.size() - 2) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw sasaki::InvalidInput("unparseable target '" + target + "'");
    }
    r = sasaki::search_connected_sum(k);
  } else {
    auto t = sasaki::TorsionGroup::parse(target);
    if (!t) throw sasaki::InvalidInput("unparseable target '" + target + "'");
    r = sasaki::search_torsion(*t);
  }
  if (r.construction) {
    out = sasaki::certificate_to_json(r.construction->certificate, r.construction->params, "search");
    out["search"] = {{"target", target}, {"status", "FOUND"}};
    note(g, "FOUND " + sasaki::family_name(r.construction->params) + ": " + r.construction->certificate.manifold);
    emit(g, out);
    return r.construction->certificate.verified() ? 0 : 1;
  }
  out["search"] = {{"target", target}, {"status", "NOT_COVERED"}, {"reason", r.reason}};
  note(g, r.reason);
  emit(g, out);
  return 1;
}

struct ClassifyOptions {
  std::string torsion;
  std::optional<long long> k;
  std::string surface;
};

int run_classify(const GlobalOptions& g, const ClassifyOptions& o) {
  if (o.torsion.empty() && !o.k && o.surface.empty())
    throw sasaki::InvalidInput("classify needs --torsion, --k or --surface");
  Json out = {{"schema_version", sasaki::kSchemaVersion}, {"command", "classify"}};
  if (!o.torsion.empty()) {
    auto t = sasaki::TorsionGroup::parse(o.torsion);
    if (!t) throw sasaki::InvalidInput("unparseable torsion group '" + o.torsion + "'");
    auto semi = sasaki::semiregular_admissible(*t);
    Json witness = Json::array();
    for (const auto& [m, d] : semi.witness) witness.push_back({{"m", sasaki::to_json_value(m)}, {"d", sasaki::to_json_value(d)}});
    out["torsion"] = {{"group", t->str()},
                      {"positive_admissible", sasaki::kollar_positive(*t)},
                      {"positive_source", "Kollar table of positive Sasakian rational homology spheres"},
                      {"semiregular_admissible", semi.admissible},
                      {"semiregular_witness", witness},
                      {"semiregular_reason", semi.reason},
                      {"semiregular_source", "semi-regular negative Sasakian classification"}};
    note(g, t->str() + (sasaki::kollar_positive(*t) ? ": positive-admissible" : ": not positive-admissible"));
  }
  if (o.k) {
    if (*o.k < 0) throw sasaki::InvalidInput("--k must be >= 0");
    auto known = sasaki::regular_negative_known(*o.k);
    out["k"] = {{"k", *o.k}, {"regular_negative", known.known ? "KNOWN" : "UNKNOWN"}, {"source", known.source}};
    note(g, "k = " + std::to_string(*o.k) + ": regular negative " + (known.known ? "KNOWN" : "UNKNOWN"));
  }
  if (!o.surface.empty()) {
    auto comma = o.surface.find(',');
    sasaki::SurfaceInvariants inv;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t a = 0, b = 0;
      inv.K_squared = std::stoi(o.surface.substr(0, comma), &a);
      inv.p_g = std::stoi(o.surface.substr(comma + 1), &b);
      if (a != comma || b != o.surface.size() - comma - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw sasaki::InvalidInput("--surface expects K2,pg");
    }
    try {
      int b2 = sasaki::betti_from_noether(inv);
      out["surface"] = {{"K_squared", inv.K_squared}, {"p_g", inv.p_g}, {"b2", b2}, {"k", b2 - 1}, {"source", "Noether formula"}};
      note(g, "b2 = " + std::to_string(b2) + ", k = " + std::to_string(b2 - 1));
    } catch (const sasaki::UnsupportedInvariants& e) {
      throw sasaki::InvalidInput(e.what());
    }
  }
  emit(g, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for negative Sasakian Seifert bundles over orbifold surfaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  GlobalOptions g;
  app.add_option("--json-in", g.json_in, "Read input JSON from FILE ('-' for stdin)");
  app.add_option("--out", g.out, "Write the document to FILE");
  app.add_flag("--quiet", g.quiet, "Suppress the summary on standard error");

  ConstructOptions co;
  auto* construct = app.add_subcommand("construct", "Build a family member and certify it");
  construct->add_option("--family", co.family, "hirzebruch | cubic | elliptic | cp2_one | cp2_two | cp2_three");
  construct->add_option("--n", co.n, "n (hirzebruch, elliptic)");
  construct->add_option("--N", co.N, "N (elliptic)");
  construct->add_option("--s", co.s, "number of branch components");
  construct->add_option("--m", co.m, "multiplicity of the cubic");
  construct->add_option("--mlist", co.mlist, "comma-separated multiplicities");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate document");
  verify->add_option("certificate", g.json_in, "Certificate FILE (default: --json-in or stdin)");

  std::string target;
  auto* search = app.add_subcommand("search", "Search parameters for a target");
  search->add_option("--target", target, "k=K or Z_m^e[,...]")->required();

  ClassifyOptions cl;
  auto* classify = app.add_subcommand("classify", "Look up classification tables");
  classify->add_option("--torsion", cl.torsion, "torsion group, e.g. Z_30^2");
  classify->add_option("--k", cl.k, "number of S^2 x S^3 summands");
  classify->add_option("--surface", cl.surface, "K2,pg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*construct) {
      if (g.json_in.empty() && co.family.empty()) throw sasaki::InvalidInput("construct needs --family or --json-in");
      return run_construct(g, co);
    }
    if (*verify) return run_verify(g);
    if (*search) return run_search(g, target);
    if (*classify) return run_classify(g, cl);
  } catch (const sasaki::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
