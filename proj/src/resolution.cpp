#include "stringy/resolution.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stringy/errors.hpp"

namespace stringy::resolution {

namespace {

std::vector<std::string> sortedIds(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

const Component& findComponent(const ResolutionData& r, const std::string& id) {
  for (const Component& c : r.components) {
    if (c.id == id) return c;
  }
  throw DomainError(ErrorCode::MalformedInput, "unknown component id '" + id + "'");
}

void requireGorenstein(const ResolutionData& r) {
  for (const Component& c : r.components) {
    if (!isInteger(c.discrepancy)) {
      throw DomainError(ErrorCode::NonGorensteinUnsupported,
                        "component '" + c.id + "' has non-integer discrepancy " +
                            to_string(c.discrepancy));
    }
  }
}

long integerDiscrepancy(const Component& c) {
  return long(numerator(c.discrepancy));
}

}  // namespace

void ResolutionData::validate() const {
  std::set<std::string> ids;
  for (const Component& c : components) {
    if (c.id.empty()) {
      throw DomainError(ErrorCode::MalformedInput, "empty component id");
    }
    if (!ids.insert(c.id).second) {
      throw DomainError(ErrorCode::MalformedInput, "duplicate component id '" + c.id + "'");
    }
    if (c.discrepancy <= -1) {
      throw DomainError(ErrorCode::MalformedInput,
                        "discrepancy of '" + c.id + "' must be > -1 (log terminal)");
    }
  }
  for (const auto& [subset, h] : openStrata) {
    std::set<std::string> seen;
    for (const std::string& id : subset) {
      if (!ids.count(id)) {
        throw DomainError(ErrorCode::MalformedInput, "stratum uses unknown id '" + id + "'");
      }
      if (!seen.insert(id).second) {
        throw DomainError(ErrorCode::MalformedInput, "stratum with repeated id '" + id + "'");
      }
    }
    if (!std::is_sorted(subset.begin(), subset.end())) {
      throw DomainError(ErrorCode::MalformedInput, "stratum subsets must be sorted");
    }
  }
  if (mode == Mode::FullVariety && !openStrata.count({})) {
    throw DomainError(ErrorCode::MalformedInput,
                      "full-variety data needs the empty-subset stratum H(D_{}°)");
  }
  if (mode == Mode::ExceptionalFiberOnly && openStrata.count({})) {
    throw DomainError(ErrorCode::MalformedInput,
                      "exceptional-fiber data must not contain the empty stratum");
  }
}

std::map<std::vector<std::string>, BiPoly> closedFromOpen(const ResolutionData& r) {
  r.validate();
  // Downward closure of the key set.
  std::set<std::vector<std::string>> lattice;
  for (const auto& [subset, h] : r.openStrata) {
    const size_t n = subset.size();
    for (size_t bits = 0; bits < (size_t(1) << n); ++bits) {
      std::vector<std::string> sub;
      for (size_t i = 0; i < n; ++i) {
        if (bits & (size_t(1) << i)) sub.push_back(subset[i]);
      }
      lattice.insert(std::move(sub));
    }
  }
  std::map<std::vector<std::string>, BiPoly> closed;
  for (const auto& subset : lattice) {
    BiPoly sum;
    for (const auto& [other, h] : r.openStrata) {
      if (std::includes(other.begin(), other.end(), subset.begin(), subset.end())) {
        sum += h;
      }
    }
    closed.emplace(subset, std::move(sum));
  }
  return closed;
}

namespace {

StringyRational weightedSum(const ResolutionData& r,
                            const std::map<std::vector<std::string>, BiPoly>& strata,
                            bool closedWeights, bool skipEmpty) {
  StringyRational total;
  for (const auto& [subset, h] : strata) {
    if (skipEmpty && subset.empty()) continue;
    if (h.isZero()) continue;
    StringyRational term;
    term.numerator = h;
    bool zeroFactor = false;
    for (const std::string& id : subset) {
      const long a = integerDiscrepancy(findComponent(r, id));
      if (closedWeights) {
        // (q - q^(a+1)) / (q^(a+1) - 1); zero when a = 0.
        if (a == 0) {
          zeroFactor = true;
          break;
        }
        BiPoly num = BiPoly::qPower(1);
        num -= BiPoly::qPower(int(a + 1));
        term.numerator *= num;
      } else {
        term.numerator *= BiPoly::qMinusOne();
      }
      term.denomExponents.insert(int(a + 1));
    }
    if (zeroFactor) continue;
    total += term;
  }
  return total;
}

}  // namespace

StringyRational stringyFromOpen(const ResolutionData& r) {
  r.validate();
  if (r.mode != Mode::FullVariety) {
    throw DomainError(ErrorCode::MalformedInput, "stringyFromOpen needs full-variety data");
  }
  requireGorenstein(r);
  return weightedSum(r, r.openStrata, /*closedWeights=*/false, /*skipEmpty=*/false);
}

StringyRational stringyFromClosed(const ResolutionData& r) {
  r.validate();
  if (r.mode != Mode::FullVariety) {
    throw DomainError(ErrorCode::MalformedInput, "stringyFromClosed needs full-variety data");
  }
  requireGorenstein(r);
  const auto closed = closedFromOpen(r);
  return weightedSum(r, closed, /*closedWeights=*/true, /*skipEmpty=*/false);
}

StringyRational exceptionalContribution(const ResolutionData& r) {
  r.validate();
  if (r.mode != Mode::ExceptionalFiberOnly) {
    throw DomainError(ErrorCode::MalformedInput,
                      "exceptionalContribution needs exceptional-fiber data");
  }
  requireGorenstein(r);
  return weightedSum(r, r.openStrata, /*closedWeights=*/false, /*skipEmpty=*/true);
}

Rat stringyEuler(const ResolutionData& r) { return limitAtOne(stringyFromOpen(r)); }

PropertyReport verifyProjectiveProperties(const StringyRational& e, int dim) {
  PropertyReport report;
  report.dualityHolds = crossEqual(e, dualTransform(e, dim));
  const auto series = seriesCoefficients(e, 0);
  const auto it = series.find({0, 0});
  report.constantTermIsOne = (it != series.end() && it->second == 1);
  return report;
}

namespace {

using nlohmann::ordered_json;

Rat ratFromJson(const ordered_json& value, const char* what) {
  if (value.is_number_integer()) return Rat(long(value.get<std::int64_t>()));
  if (value.is_string()) return parseRat(value.get<std::string>());
  throw DomainError(ErrorCode::MalformedInput,
                    std::string(what) + " must be an integer or a 'p/q' string");
}

ordered_json ratToJson(const Rat& r) {
  if (isInteger(r)) {
    const Int n = numerator(r);
    static const Int lo = Int(std::int64_t(-9007199254740992LL));
    static const Int hi = Int(std::int64_t(9007199254740992LL));
    if (n > lo && n < hi) return ordered_json(std::int64_t(n));
  }
  return ordered_json(to_string(r));
}

}  // namespace

ResolutionData fromJson(const std::string& jsonText) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(jsonText);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  try {
    ResolutionData r;
    r.dimension = doc.at("dimension").get<int>();
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "fullVariety") {
      r.mode = Mode::FullVariety;
    } else if (mode == "exceptionalFiberOnly") {
      r.mode = Mode::ExceptionalFiberOnly;
    } else {
      throw DomainError(ErrorCode::MalformedInput, "unknown mode '" + mode + "'");
    }
    for (const auto& c : doc.at("components")) {
      r.components.push_back(
          {c.at("id").get<std::string>(), ratFromJson(c.at("discrepancy"), "discrepancy")});
    }
    for (const auto& s : doc.at("strata")) {
      std::vector<std::string> subset;
      for (const auto& id : s.at("subset")) subset.push_back(id.get<std::string>());
      subset = sortedIds(std::move(subset));
      BiPoly h;
      for (const auto& mono : s.at("hodge")) {
        h.addTerm(mono.at("i").get<int>(), mono.at("j").get<int>(),
                  ratFromJson(mono.at("coeff"), "coeff"));
      }
      if (!r.openStrata.emplace(std::move(subset), std::move(h)).second) {
        throw DomainError(ErrorCode::MalformedInput, "duplicate stratum subset");
      }
    }
    r.validate();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(ErrorCode::MalformedInput, std::string("bad schema: ") + e.what());
  }
}

std::string toJson(const ResolutionData& r) {
  ordered_json doc;
  doc["dimension"] = r.dimension;
  doc["mode"] = r.mode == Mode::FullVariety ? "fullVariety" : "exceptionalFiberOnly";
  doc["components"] = ordered_json::array();
  for (const Component& c : r.components) {
    doc["components"].push_back({{"id", c.id}, {"discrepancy", ratToJson(c.discrepancy)}});
  }
  doc["strata"] = ordered_json::array();
  for (const auto& [subset, h] : r.openStrata) {
    ordered_json entry;
    entry["subset"] = subset;
    entry["hodge"] = ordered_json::array();
    for (const auto& [e, c] : h.terms()) {
      entry["hodge"].push_back({{"i", e.u}, {"j", e.v}, {"coeff", ratToJson(c)}});
    }
    doc["strata"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

ResolutionData loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return fromJson(buffer.str());
}

}  // namespace stringy::resolution
