#include <braidkit/io.hpp>

namespace braidkit {

namespace {

SimpleSequence read_sequence(const nlohmann::json& j, int n) {
  SimpleSequence seq;
  for (const auto& entry : j) {
    auto s = simple_from_json(entry);
    if (s.strands() != n) throw InvalidArgument("factor size differs from n");
    seq.push_back(std::move(s));
  }
  return seq;
}

}  // namespace

void to_json(nlohmann::json& j, const SimpleBraid& s) { j = s.perm().image(); }

SimpleBraid simple_from_json(const nlohmann::json& j) {
  return SimpleBraid(Permutation(j.get<std::vector<int>>()));
}

void to_json(nlohmann::json& j, const GreedyNF& nf) {
  j = nlohmann::json{{"n", nf.n}, {"delta_exp", nf.delta_exp}, {"factors", nf.factors}};
}

void from_json(const nlohmann::json& j, GreedyNF& nf) {
  nf.n = j.at("n").get<int>();
  nf.delta_exp = j.at("delta_exp").get<int>();
  nf.factors = read_sequence(j.at("factors"), nf.n);
}

void to_json(nlohmann::json& j, const SymmetricNF& nf) {
  j = nlohmann::json{{"n", nf.n}, {"den", nf.den}, {"num", nf.num}};
}

void from_json(const nlohmann::json& j, SymmetricNF& nf) {
  nf.n = j.at("n").get<int>();
  nf.den = read_sequence(j.at("den"), nf.n);
  nf.num = read_sequence(j.at("num"), nf.n);
}

void to_json(nlohmann::json& j, const DynnikovCoords& c) {
  j = nlohmann::json::array();
  for (const auto& v : c.values) {
    if (v.fits_slong_p()) {
      j.push_back(v.get_si());
    } else {
      j.push_back(v.get_str());
    }
  }
}

void from_json(const nlohmann::json& j, DynnikovCoords& c) {
  if (j.size() < 4 || j.size() % 2 != 0) {
    throw InvalidArgument("coordinate array must have even length >= 4");
  }
  c.n = static_cast<int>(j.size() / 2);
  c.values.clear();
  for (const auto& v : j) {
    c.values.push_back(v.is_string() ? BigInt(v.get<std::string>())
                                     : BigInt(v.get<long>()));
  }
}

void to_json(nlohmann::json& j, const FuzzReport& report) {
  auto disagreements = nlohmann::json::array();
  for (const auto& d : report.disagreements) {
    nlohmann::json verdicts;
    for (std::size_t k = 0; k < kAllMethods.size(); ++k) {
      verdicts[std::string(method_name(kAllMethods[k]))] =
          std::string(verdict_name(d.verdicts[k]));
    }
    disagreements.push_back({{"n", d.word.strands()},
                             {"word", render(d.word, WordFormat::intlist)},
                             {"forced_trivial", d.forced_trivial},
                             {"verdicts", verdicts}});
  }
  auto exhausted = nlohmann::json::array();
  for (const auto& w : report.budget_exhausted) {
    exhausted.push_back({{"n", w.strands()}, {"word", render(w, WordFormat::intlist)}});
  }
  j = nlohmann::json{{"cases_run", report.cases_run},
                     {"disagreements", disagreements},
                     {"budget_exhausted", exhausted},
                     {"passed", report.passed()}};
}

}  // namespace braidkit
