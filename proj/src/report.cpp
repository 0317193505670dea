#include "cyclo/report.hpp"

namespace cyclo {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

void Report::append(std::vector<Check> more) {
  checks.insert(checks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["id"] = c.id;
    e["subject"] = c.subject;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["passed"] = passed();
  j["failed"] = failed();
  return j;
}

Json to_json(const CycloElem& x) { return Json(x.coeff_strings()); }

Json to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyclo
