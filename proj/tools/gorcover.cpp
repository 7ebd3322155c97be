#include "gorcover/mgc.hpp"
#include "gorcover/problem.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gorcover;

namespace {

constexpr const char* kEngine = "gorcover 0.1.0";

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kNotPrimary = 3, kGorenstein = 4, kGclOne = 5 };

struct Options {
  std::string input = "-";
  std::string format = "text";
  std::size_t power = 1;
  bool matrices = false;
  std::size_t certify = 0;
  std::uint64_t seed = 1;
  std::optional<unsigned> degree_cap;
  bool timing = false;
};

class GclOne : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::json rows_of(const QMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row = "[";
    for (std::size_t c = 0; c < m.cols(); ++c) row += (c ? ", " : "") + to_string(m(r, c));
    out.push_back(row + "]");
  }
  return out;
}

nlohmann::json rows_of(const PolyMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::string row = "[";
    for (std::size_t c = 0; c < m.cols(); ++c) row += (c ? ", " : "") + m(r, c).to_string();
    out.push_back(row + "]");
  }
  return out;
}

Document profile_block(const AlgebraProfile& p) {
  Document d;
  d["length"] = p.length;
  d["hilbert"] = p.hilbert;
  d["socle_degree"] = p.socle_degree;
  d["type"] = p.type;
  d["embedding_dim"] = p.embedding_dim;
  return d;
}

void add_matrices(Document& doc, const DualBasisWithContractions& d) {
  for (std::size_t k = 0; k < d.u.size(); ++k) doc["U" + std::to_string(k + 1)] = rows_of(d.u[k]);
}

std::string point_text(std::span<const Rational> coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + to_string(coords[i]);
  return s + ")";
}

Document sample_block(const SampleReport& r, std::size_t trials, std::uint64_t seed) {
  Document d;
  d["trials"] = trials;
  d["seed"] = seed;
  d["inside"] = r.inside;
  d["inside_certified"] = r.inside_certified;
  d["outside"] = r.outside;
  d["outside_rejected"] = r.outside_rejected;
  d["agree"] = r.all_agree();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : r.points) {
    std::string s = point_text(p.coords) + (p.inside ? " inside" : " outside");
    if (p.colength > 0) {
      s += " cover colength " + std::to_string(p.colength);
    } else {
      s += " not a cover, witness " + p.witness;
    }
    pts.push_back(s);
  }
  d["points"] = pts;
  return d;
}

Document presentation_block(const VarietyPresentation& p) {
  Document d;
  d["ambient"] = "P^" + std::to_string(p.projective_dim());
  std::string coords;
  for (std::size_t i = 0; i < p.ring->size(); ++i) coords += (i ? "," : "") + p.ring->name(i);
  d["coordinates"] = coords;
  d["keep"] = generator_array(p.keep.gens);
  d["remove"] = generator_array(p.remove.gens);
  return d;
}

AdaptedIntegral adapted(const ProblemFile& prob, const DualBasisWithContractions& base, std::size_t t) {
  if (prob.layers.empty()) return integrate_power(base, t);
  if (prob.layers.size() < t) throw ParseError("fewer layer statements than integration steps", 0);
  std::vector<std::vector<Poly>> layers(prob.layers.begin(), prob.layers.begin() + static_cast<std::ptrdiff_t>(t));
  try {
    return adapted_from_layers(base, std::move(layers));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

Document run(const std::string& cmd, const Options& opt) {
  const std::string text = read_input(opt.input);
  const ProblemFile prob = parse_problem(text);
  const auto start = std::chrono::steady_clock::now();

  Document doc;
  doc["engine"] = kEngine;
  doc["command"] = cmd;
  doc["input"] = to_problem_text(prob);
  const DualBasisWithContractions base = inverse_system(prob.rings, prob.ideal, opt.degree_cap);
  const AlgebraProfile prof = algebra_profile(base.as_system());
  doc["profile"] = profile_block(prof);

  if (cmd == "dual") {
    doc["dual_basis"] = generator_array(base.basis);
    if (opt.matrices) add_matrices(doc, base);
  } else if (cmd == "integrate") {
    doc["power"] = opt.power;
    doc["dual_basis"] = generator_array(base.basis);
    if (opt.power == 0) {
      if (opt.matrices) add_matrices(doc, base);
    } else {
      const AdaptedIntegral ai = adapted(prob, base, opt.power);
      for (std::size_t i = 0; i < ai.t(); ++i) doc["layer_" + std::to_string(i + 1)] = generator_array(ai.layers[i]);
      doc["dim"] = ai.full.dim();
      if (opt.matrices) add_matrices(doc, ai.full);
    }
  } else if (cmd == "teter") {
    const TeterResult tr = teter_variety(adapted(prob, base, 1));
    doc["F"] = tr.generic_f.to_string();
    if (opt.matrices) doc["A"] = rows_of(tr.matrix);
    doc["a"] = generator_array(tr.a.gens);
    doc["gcl"] = tr.colength_one() ? "1" : ">1";
    doc["presentation"] = presentation_block(tr.presentation);
    if (opt.certify > 0 && tr.colength_one()) {
      doc["certify"] = sample_block(sample_and_certify(tr.presentation, tr.integral, opt.certify, opt.seed),
                                    opt.certify, opt.seed);
    }
  } else if (cmd == "mgc2") {
    const TeterResult tr = teter_variety(adapted(prob, base, 1));
    if (tr.colength_one()) throw GclOne("gcl = 1");
    const Mgc2Matrices m = mgc2_matrices(adapted(prob, base, 2));
    const Mgc2Ideals id = mgc2_ideals(m);
    doc["H"] = m.generic_h.to_string();
    if (opt.matrices) {
      doc["B_H"] = rows_of(m.b_h);
      doc["C_Hv"] = rows_of(m.c_hv);
      doc["U_Hv"] = rows_of(m.u_hv);
    }
    doc["b"] = generator_array(id.b.gens);
    doc["d_hat"] = generator_array(id.d_hat.gens);
    const bool empty = radical_contains(id.b, id.d_hat);
    doc["gcl"] = empty ? ">2" : "2";
    doc["presentation"] = presentation_block(id.presentation);
    if (opt.certify > 0 && !empty) {
      doc["certify"] = sample_block(sample_and_certify(id.presentation, m.integral, opt.certify, opt.seed),
                                    opt.certify, opt.seed);
    }
  } else if (cmd == "check-cover") {
    if (!prob.dualpoly) throw ParseError("check-cover needs a dualpoly statement", 0);
    const CoverCheck check = check_cover(prob.rings, base.as_system(), *prob.dualpoly);
    doc["F"] = prob.dualpoly->to_string();
    doc["cover"] = check.is_cover();
    if (check.is_cover()) {
      const auto& c = *check.certificate;
      doc["colength"] = c.colength;
      doc["K_F"] = generator_array(c.k_f);
      doc["length_A"] = c.length_a;
      doc["length_G"] = c.length_g;
    } else {
      doc["witness"] = check.witness->to_string();
    }
  } else if (cmd != "profile") {
    throw std::logic_error("unknown command " + cmd);
  }
  if (opt.timing) {
    doc["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return doc;
}

int report(const std::string& kind, const std::string& what, int code) {
  std::cerr << kind << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse systems, integrals and minimal Gorenstein covers of Artin local algebras"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"profile", "length, Hilbert function, socle degree, type, embedding dimension"},
      {"dual", "basis of the inverse system"},
      {"integrate", "adapted basis of the integral of the inverse system over m^t"},
      {"teter", "Teter variety (covers of colength 1)"},
      {"mgc2", "minimal Gorenstein covers of colength 2"},
      {"check-cover", "certify a dual polynomial as a Gorenstein cover"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "problem file, '-' for stdin")->capture_default_str();
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--degree-cap", opt.degree_cap, "give up on the inverse system past this degree");
    sub->add_flag("--timing", opt.timing, "include the running time in the output");
    if (name == "integrate") sub->add_option("--power,-t", opt.power, "integration power t")->capture_default_str();
    if (name == "dual" || name == "integrate" || name == "teter" || name == "mgc2") {
      sub->add_flag("--matrices", opt.matrices, "print contraction or parameter matrices");
    }
    if (name == "teter" || name == "mgc2") {
      sub->add_option("--certify", opt.certify, "sample and certify this many points per side");
      sub->add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Document doc = run(cmd, opt);
    if (opt.format == "json") {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << render_text(doc);
    }
    return kOk;
  } catch (const ParseError& e) {
    return report("parse error", e.what(), kParse);
  } catch (const NotMPrimary& e) {
    return report("not m-primary", e.what(), kNotPrimary);
  } catch (const GorensteinInput& e) {
    return report("Gorenstein input", e.what(), kGorenstein);
  } catch (const GclOne& e) {
    return report("colength one", e.what(), kGclOne);
  } catch (const std::exception& e) {
    return report("error", e.what(), kInternal);
  }
}
