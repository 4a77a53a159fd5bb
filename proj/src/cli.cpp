#include "stringy/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stringy/brieskorn.hpp"
#include "stringy/errors.hpp"
#include "stringy/hodge.hpp"
#include "stringy/newton_zeta.hpp"
#include "stringy/resolution.hpp"
#include "stringy/text.hpp"
#include "stringy/worked_example.hpp"

namespace stringy::cli {

namespace {

using nlohmann::ordered_json;

std::vector<long> parseLongList(const std::string& csv, const char* what) {
  std::vector<long> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      size_t used = 0;
      const long value = std::stol(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(value);
    } catch (const std::exception&) {
      throw DomainError(ErrorCode::MalformedInput,
                        std::string(what) + ": cannot parse '" + item + "'");
    }
  }
  if (values.empty()) {
    throw DomainError(ErrorCode::MalformedInput, std::string(what) + ": empty list");
  }
  return values;
}

std::string subsetToString(brieskorn::Subset subset) {
  std::string text = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (subset & (brieskorn::Subset(1) << i)) {
      if (!first) text += ",";
      text += std::to_string(i + 1);
      first = false;
    }
  }
  return text + "}";
}

std::vector<int> subsetToIndices(brieskorn::Subset subset) {
  std::vector<int> indices;
  for (int i = 0; i < 32; ++i) {
    if (subset & (brieskorn::Subset(1) << i)) indices.push_back(i + 1);
  }
  return indices;
}

std::string classificationName(brieskorn::Canonicity c, long excess) {
  switch (c) {
    case brieskorn::Canonicity::NotCanonical:
      return "not canonical (Sigma - k = " + std::to_string(excess) + " < 1)";
    case brieskorn::Canonicity::StrictlyCanonical:
      return "strictly canonical (Sigma - k = 1)";
    case brieskorn::Canonicity::CanonicalSigmaMinusKAtLeast2:
      return "canonical (Sigma - k = " + std::to_string(excess) + " >= 2)";
  }
  return "unknown";
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void printSeries(std::ostream& out, const std::map<std::pair<int, int>, Rat>& coeffs) {
  std::vector<std::pair<std::pair<int, int>, Rat>> sorted(coeffs.begin(), coeffs.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.first + a.first.second;
    const int tb = b.first.first + b.first.second;
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  for (const auto& [key, c] : sorted) {
    out << "b[" << key.first << "," << key.second << "] = " << to_string(c) << "\n";
  }
}

ordered_json seriesToJson(const std::map<std::pair<int, int>, Rat>& coeffs) {
  std::vector<std::pair<std::pair<int, int>, Rat>> sorted(coeffs.begin(), coeffs.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.first + a.first.second;
    const int tb = b.first.first + b.first.second;
    if (ta != tb) return ta < tb;
    return a.first < b.first;
  });
  ordered_json list = ordered_json::array();
  for (const auto& [key, c] : sorted) {
    list.push_back({{"i", key.first}, {"j", key.second}, {"coeff", to_string(c)}});
  }
  return list;
}

struct CommandContext {
  std::ostream& out;
  bool json = false;
};

void emit(const CommandContext& ctx, const std::string& text, const ordered_json& doc) {
  if (ctx.json) {
    ctx.out << doc.dump(2) << "\n";
  } else {
    ctx.out << text;
  }
}

void runBrieskorn(const CommandContext& ctx, const std::string& exponentsCsv, int seriesDegree,
                  bool normalForm) {
  const std::vector<long> exponents = parseLongList(exponentsCsv, "--exponents");
  const brieskorn::BrieskornData data = brieskorn::analyze(exponents);
  const StringyRational c = brieskorn::contribution(exponents);
  const brieskorn::SubsetFamilyS family = brieskorn::computeFamilyS(data.alpha);
  const auto ps = brieskorn::pPolynomials(data);

  std::ostringstream text;
  ordered_json doc;
  doc["command"] = "brieskorn";
  text << "exponents: (";
  for (size_t i = 0; i < exponents.size(); ++i) {
    text << (i ? "," : "") << exponents[i];
  }
  text << ")\n";
  doc["exponents"] = exponents;
  text << "k = " << data.k << "\n";
  doc["k"] = data.k;
  text << "alpha = (";
  for (size_t i = 0; i < data.alpha.size(); ++i) text << (i ? "," : "") << data.alpha[i];
  text << ")\n";
  doc["alpha"] = data.alpha;
  text << "Sigma = " << data.sigma << "\n";
  doc["sigma"] = data.sigma;
  text << "classification: " << classificationName(data.classification, data.sigmaMinusK())
       << "\n";
  doc["classification"] = classificationName(data.classification, data.sigmaMinusK());
  text << "S = {";
  ordered_json familyJson = ordered_json::array();
  for (size_t i = 0; i < family.members.size(); ++i) {
    text << (i ? ", " : "") << subsetToString(family.members[i]);
    familyJson.push_back(subsetToIndices(family.members[i]));
  }
  text << "}\n";
  doc["familyS"] = familyJson;
  ordered_json pJson;
  for (const brieskorn::Subset subset : family.members) {
    text << "p[" << subsetToString(subset) << "] = " << to_string(ps.at(subset)) << "\n";
    pJson[subsetToString(subset)] = to_string(ps.at(subset));
  }
  doc["p"] = pJson;
  text << "contribution = " << to_string(c) << "\n";
  doc["contribution"] = to_string(c);
  if (normalForm) {
    const BiPoly p = brieskorn::signNormalNumerator(c, data);
    QPoly denominator;
    for (long i = 0; i <= data.sigmaMinusK() - 1; ++i) denominator += QPoly::qPower(i);
    text << "normal form = (" << to_string(p) << ") / (" << to_string(denominator) << ")\n";
    doc["normalForm"] = {{"numerator", to_string(p)}, {"denominator", to_string(denominator)}};
  }
  if (seriesDegree >= 0) {
    const auto coeffs = seriesCoefficients(c, seriesDegree);
    printSeries(text, coeffs);
    doc["series"] = seriesToJson(coeffs);
  }
  emit(ctx, text.str(), doc);
}

void runFamilyS(const CommandContext& ctx, const std::string& alphaCsv) {
  const std::vector<long> alpha = parseLongList(alphaCsv, "--alpha");
  const brieskorn::SubsetFamilyS family = brieskorn::computeFamilyS(alpha);
  std::ostringstream text;
  text << "S = {";
  ordered_json familyJson = ordered_json::array();
  for (size_t i = 0; i < family.members.size(); ++i) {
    text << (i ? ", " : "") << subsetToString(family.members[i]);
    familyJson.push_back(subsetToIndices(family.members[i]));
  }
  text << "}\n";
  ordered_json doc;
  doc["command"] = "family-s";
  doc["alpha"] = alpha;
  doc["familyS"] = familyJson;
  emit(ctx, text.str(), doc);
}

void runFermat(const CommandContext& ctx, int dim, long degree) {
  const hodge::HodgePolynomial h = hodge::fermatHodge(dim, degree);
  ordered_json doc;
  doc["command"] = "fermat";
  doc["dim"] = dim;
  doc["degree"] = degree;
  doc["hodge"] = to_string(h.poly);
  emit(ctx, to_string(h.poly) + "\n", doc);
}

void runQuasiHom(const CommandContext& ctx, const std::string& weightsCsv, long degree) {
  hodge::WeightSystem ws;
  ws.weights = parseLongList(weightsCsv, "--weights");
  ws.degree = degree;
  const hodge::HodgePolynomial h = hodge::quasiHomHodge(ws);
  ordered_json doc;
  doc["command"] = "quasihom";
  doc["weights"] = ws.weights;
  doc["degree"] = degree;
  doc["hodge"] = to_string(h.poly);
  emit(ctx, to_string(h.poly) + "\n", doc);
}

void runZeta(const CommandContext& ctx, const std::string& exponentsCsv) {
  const std::vector<long> exponents = parseLongList(exponentsCsv, "--exponents");
  const newton::ZetaExpression z = newton::localHodgeZetaDiagonal(exponents);
  ordered_json doc;
  doc["command"] = "zeta";
  doc["exponents"] = exponents;
  ordered_json terms = ordered_json::array();
  for (const newton::ZetaTerm& term : z.terms) {
    ordered_json t;
    t["numerator"] = ordered_json::array();
    for (const auto& [m, c] : term.numerator) {
      t["numerator"].push_back({{"u", m.u}, {"v", m.v}, {"t", m.t}, {"coeff", to_string(c)}});
    }
    t["denomFactors"] = ordered_json::array();
    for (const auto& [a, b] : term.denomFactors) {
      t["denomFactors"].push_back({{"a", a}, {"b", b}});
    }
    terms.push_back(std::move(t));
  }
  doc["terms"] = terms;
  doc["rendered"] = to_string(z);
  emit(ctx, to_string(z) + "\n", doc);
}

void runResidue(const CommandContext& ctx, const std::string& exponentsCsv) {
  const std::vector<long> exponents = parseLongList(exponentsCsv, "--exponents");
  const StringyRational c = newton::faceSumContribution(exponents);
  ordered_json doc;
  doc["command"] = "residue";
  doc["exponents"] = exponents;
  doc["contribution"] = to_string(c);
  emit(ctx, "contribution = " + to_string(c) + "\n", doc);
}

void runResolution(const CommandContext& ctx, const std::string& path, bool contribution) {
  const resolution::ResolutionData data = resolution::loadFile(path);
  std::ostringstream text;
  ordered_json doc;
  doc["command"] = "resolution";
  doc["input"] = path;
  if (contribution) {
    const StringyRational c = resolution::exceptionalContribution(data);
    text << "contribution = " << to_string(c) << "\n";
    doc["contribution"] = to_string(c);
  } else {
    const StringyRational est = resolution::stringyFromOpen(data);
    const Rat euler = resolution::stringyEuler(data);
    text << "E_st = " << to_string(est) << "\n";
    text << "stringy Euler number = " << to_string(euler) << "\n";
    doc["est"] = to_string(est);
    doc["stringyEuler"] = to_string(euler);
  }
  emit(ctx, text.str(), doc);
}

void runSeries(const CommandContext& ctx, const std::string& path, int maxDegree) {
  const StringyRational f = parseStringyRational(readFile(path));
  const auto coeffs = seriesCoefficients(f, maxDegree);
  std::ostringstream text;
  printSeries(text, coeffs);
  ordered_json doc;
  doc["command"] = "series";
  doc["input"] = path;
  doc["maxDegree"] = maxDegree;
  doc["coefficients"] = seriesToJson(coeffs);
  emit(ctx, text.str(), doc);
}

void runVerify(const CommandContext& ctx, const std::string& path, int dim) {
  const StringyRational f = parseStringyRational(readFile(path));
  const resolution::PropertyReport report = resolution::verifyProjectiveProperties(f, dim);
  std::ostringstream text;
  text << "duality: " << (report.dualityHolds ? "pass" : "fail") << "\n";
  text << "E(0,0) = 1: " << (report.constantTermIsOne ? "pass" : "fail") << "\n";
  ordered_json doc;
  doc["command"] = "verify";
  doc["input"] = path;
  doc["dim"] = dim;
  doc["duality"] = report.dualityHolds;
  doc["constantTermIsOne"] = report.constantTermIsOne;
  emit(ctx, text.str(), doc);
}

void runExample53(const CommandContext& ctx, const std::string& coeffCsv) {
  const example::Assembly assembly = example::assemble();
  if (!coeffCsv.empty()) {
    const std::vector<long> pair = parseLongList(coeffCsv, "--coeff");
    if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0) {
      throw DomainError(ErrorCode::MalformedInput, "--coeff needs two nonnegative integers");
    }
    const int degree = int(pair[0] + pair[1]);
    const auto coeffs = seriesCoefficients(assembly.total, degree);
    const auto it = coeffs.find({int(pair[0]), int(pair[1])});
    const Rat value = it == coeffs.end() ? Rat(0) : it->second;
    ordered_json doc;
    doc["command"] = "example53";
    doc["coeff"] = {{"i", pair[0]}, {"j", pair[1]}, {"value", to_string(value)}};
    emit(ctx, to_string(value) + "\n", doc);
    return;
  }
  const auto coeffs = seriesCoefficients(assembly.total, 6);
  const auto it = coeffs.find({3, 3});
  const Rat b33 = it == coeffs.end() ? Rat(0) : it->second;
  std::ostringstream text;
  text << "A = " << to_string(assembly.contributionA) << "\n";
  text << "B = " << to_string(assembly.contributionB) << "\n";
  text << "C = " << to_string(assembly.smoothInfinity) << "\n";
  text << "D = " << to_string(assembly.smoothAffine) << "\n";
  text << "E_st = " << to_string(assembly.total) << "\n";
  text << "b[3,3] = " << to_string(b33) << "\n";
  ordered_json doc;
  doc["command"] = "example53";
  doc["A"] = to_string(assembly.contributionA);
  doc["B"] = to_string(assembly.contributionB);
  doc["C"] = to_string(assembly.smoothInfinity);
  doc["D"] = to_string(assembly.smoothAffine);
  doc["est"] = to_string(assembly.total);
  doc["b33"] = to_string(b33);
  emit(ctx, text.str(), doc);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stringy E-function calculator"};
  app.require_subcommand(1);

  bool json = false;
  std::string exponentsCsv, alphaCsv, weightsCsv, inputPath, coeffCsv;
  int dim = 0;
  long degree = 0;
  int seriesDegree = -1;
  int maxDegree = 0;
  bool normalForm = false;
  bool contribution = false;

  CLI::App* brieskornCmd =
      app.add_subcommand("brieskorn", "classification, S, p_J and the contribution");
  brieskornCmd->add_option("--exponents", exponentsCsv, "comma-separated exponents, each >= 2")
      ->required();
  brieskornCmd->add_option("--series", seriesDegree, "print b_ij up to this total degree");
  brieskornCmd->add_flag("--normal-form", normalForm, "print the sign-normal form");

  CLI::App* familyCmd = app.add_subcommand("family-s", "the subset family S of a vector");
  familyCmd->add_option("--alpha", alphaCsv, "comma-separated positive integers")->required();

  CLI::App* fermatCmd = app.add_subcommand("fermat", "Hodge-Deligne polynomial of a Fermat hypersurface");
  fermatCmd->add_option("--dim", dim, "dimension of the hypersurface")->required();
  fermatCmd->add_option("--degree", degree, "degree")->required();

  CLI::App* quasiCmd =
      app.add_subcommand("quasihom", "Hodge-Deligne polynomial of a quasi-homogeneous singularity");
  quasiCmd->add_option("--weights", weightsCsv, "comma-separated weights")->required();
  quasiCmd->add_option("--degree", degree, "quasi-homogeneous degree")->required();

  CLI::App* zetaCmd = app.add_subcommand("zeta", "local Hodge zeta function of a diagonal polynomial");
  zetaCmd->add_option("--exponents", exponentsCsv, "comma-separated exponents")->required();

  CLI::App* residueCmd =
      app.add_subcommand("residue", "contribution via the zeta-function residue route");
  residueCmd->add_option("--exponents", exponentsCsv, "comma-separated exponents")->required();

  CLI::App* resolutionCmd =
      app.add_subcommand("resolution", "evaluate log-resolution stratification data");
  resolutionCmd->add_option("--input", inputPath, "JSON stratification file")->required();
  resolutionCmd->add_flag("--contribution", contribution,
                          "expect exceptional-fiber data and print the contribution");

  CLI::App* seriesCmd = app.add_subcommand("series", "power-series coefficients of an expression");
  seriesCmd->add_option("--input", inputPath, "expression file")->required();
  seriesCmd->add_option("--max-degree", maxDegree, "largest total degree")->required();

  CLI::App* verifyCmd = app.add_subcommand("verify", "projective duality and E(0,0) checks");
  verifyCmd->add_option("--input", inputPath, "expression file")->required();
  verifyCmd->add_option("--dim", dim, "dimension of the variety")->required();

  CLI::App* exampleCmd = app.add_subcommand("example53", "the bundled 6-dimensional worked example");
  exampleCmd->add_option("--coeff", coeffCsv, "print one series coefficient, e.g. 3,3");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_flag("--json", json, "emit a JSON document instead of text");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: MalformedInput: " << e.what() << "\n";
    return 2;
  }

  const CommandContext ctx{out, json};
  try {
    if (brieskornCmd->parsed()) {
      runBrieskorn(ctx, exponentsCsv, seriesDegree, normalForm);
    } else if (familyCmd->parsed()) {
      runFamilyS(ctx, alphaCsv);
    } else if (fermatCmd->parsed()) {
      runFermat(ctx, dim, degree);
    } else if (quasiCmd->parsed()) {
      runQuasiHom(ctx, weightsCsv, degree);
    } else if (zetaCmd->parsed()) {
      runZeta(ctx, exponentsCsv);
    } else if (residueCmd->parsed()) {
      runResidue(ctx, exponentsCsv);
    } else if (resolutionCmd->parsed()) {
      runResolution(ctx, inputPath, contribution);
    } else if (seriesCmd->parsed()) {
      runSeries(ctx, inputPath, maxDegree);
    } else if (verifyCmd->parsed()) {
      runVerify(ctx, inputPath, dim);
    } else if (exampleCmd->parsed()) {
      runExample53(ctx, coeffCsv);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::MalformedInput ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: InternalError: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace stringy::cli
