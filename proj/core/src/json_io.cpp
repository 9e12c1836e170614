#include "rsk/json_io.hpp"

#include "rsk/errors.hpp"

namespace rsk {

namespace {

// Wraps nlohmann's type errors into this library's ParseError so callers see
// one failure mode for malformed input.
template <typename Fn>
auto translated(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace

void to_json(nlohmann::json& j, const Permutation& pi) { j = pi.word(); }

void from_json(const nlohmann::json& j, Permutation& pi) {
  translated([&] { pi = Permutation(j.get<std::vector<int>>()); });
}

void to_json(nlohmann::json& j, const Partition& shape) { j = shape.parts(); }

void from_json(const nlohmann::json& j, Partition& shape) {
  translated([&] { shape = Partition(j.get<std::vector<int>>()); });
}

void to_json(nlohmann::json& j, const Tableau& t) {
  j = nlohmann::json{{"rows", t.rows()}};
}

void from_json(const nlohmann::json& j, Tableau& t) {
  translated([&] {
    t = Tableau(j.at("rows").get<std::vector<std::vector<int>>>());
  });
}

void to_json(nlohmann::json& j, const TableauPair& pair) {
  j = nlohmann::json{{"P", pair.p()}, {"Q", pair.q()}};
}

void from_json(const nlohmann::json& j, TableauPair& pair) {
  translated([&] {
    pair = TableauPair(j.at("P").get<Tableau>(), j.at("Q").get<Tableau>());
  });
}

void to_json(nlohmann::json& j, const ImbalanceRecord& record) {
  j = nlohmann::json{{"shape", record.shape},
                     {"e", record.shape.even_row_total()},
                     {"imbalance", record.imbalance},
                     {"tableau_count", record.tableau_count},
                     {"polynomial", record.polynomial.coefficients()}};
}

void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"input", v.input}, {"expected", v.expected}, {"actual", v.actual}};
}

void to_json(nlohmann::json& j, const VerificationReport& report) {
  j = nlohmann::json{{"suite", report.suite},
                     {"n_max", report.n_max},
                     {"cases_checked", report.cases_checked},
                     {"violations", report.violations},
                     {"passed", report.passed()}};
}

}  // namespace rsk
