#include "bpfib/json_io.hpp"

namespace bpfib {

void to_json(nlohmann::json& j, const Rational& x) { j = x.str(); }

void from_json(const nlohmann::json& j, Rational& x) { x = Rational::parse(j.get<std::string>()); }

void to_json(nlohmann::json& j, const Mat2& m) {
    j = nlohmann::json{{"e11", m.e11}, {"e12", m.e12}, {"e21", m.e21}, {"e22", m.e22}};
}

void from_json(const nlohmann::json& j, Mat2& m) {
    m.e11 = j.at("e11").get<Rational>();
    m.e12 = j.at("e12").get<Rational>();
    m.e21 = j.at("e21").get<Rational>();
    m.e22 = j.at("e22").get<Rational>();
}

void to_json(nlohmann::json& j, const SumReport& r) {
    j = nlohmann::json{{"n", r.n}, {"direct", r.direct}, {"closed", r.closed}, {"matches", r.matches}};
}

void from_json(const nlohmann::json& j, SumReport& r) {
    r.n = j.at("n").get<std::int64_t>();
    r.direct = j.at("direct").get<Mat2>();
    r.closed = j.at("closed").get<Mat2>();
    r.matches = j.at("matches").get<bool>();
}

}  // namespace bpfib
