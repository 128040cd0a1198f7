#include "motivic/lpoly.hpp"

#include <nlohmann/json.hpp>

#include <regex>
#include <sstream>
#include <stdexcept>

namespace motivic {

namespace {
const mpz_class kZero = 0;
}

LPoly LPoly::monomial(long degree, mpz_class c) {
    LPoly p;
    if (c != 0) p.coeffs_.emplace(degree, std::move(c));
    return p;
}

long LPoly::min_degree() const {
    if (is_zero()) throw std::logic_error("min_degree of zero polynomial");
    return coeffs_.begin()->first;
}

long LPoly::max_degree() const {
    if (is_zero()) throw std::logic_error("max_degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

const mpz_class& LPoly::coefficient(long j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? kZero : it->second;
}

void LPoly::insert_nonzero(long degree, mpz_class c) {
    if (c != 0) coeffs_.emplace(degree, std::move(c));
}

LPoly LPoly::operator+(const LPoly& rhs) const {
    LPoly out = *this;
    for (const auto& [deg, c] : rhs.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(deg, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

LPoly LPoly::operator-(const LPoly& rhs) const {
    LPoly out = *this;
    for (const auto& [deg, c] : rhs.coeffs_) {
        auto [it, inserted] = out.coeffs_.try_emplace(deg, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

LPoly LPoly::operator*(const LPoly& rhs) const {
    Coeffs raw;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : rhs.coeffs_) raw[da + db] += ca * cb;
    return lpoly_from_coeffs(std::move(raw));
}

LPoly LPoly::shifted(long s) const {
    LPoly out;
    for (const auto& [deg, c] : coeffs_) out.coeffs_.emplace(deg + s, c);
    return out;
}

bool LPoly::eq_mod(const LPoly& rhs, long m) const {
    // Compare the parts strictly above degree m.
    auto a = coeffs_.upper_bound(m);
    auto b = rhs.coeffs_.upper_bound(m);
    for (; a != coeffs_.end() && b != rhs.coeffs_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return a == coeffs_.end() && b == rhs.coeffs_.end();
}

LPoly LPoly::truncate_below(long m) const {
    LPoly out;
    for (auto it = coeffs_.upper_bound(m); it != coeffs_.end(); ++it)
        out.coeffs_.emplace(it->first, it->second);
    return out;
}

mpz_class LPoly::eval_at_one() const {
    mpz_class s = 0;
    for (const auto& [deg, c] : coeffs_) s += c;
    return s;
}

bool LPoly::is_palindromic(long low, long high) const {
    if (low > high) return is_zero();
    if (!is_zero() && (min_degree() < low || max_degree() > high)) return false;
    for (long j = 0; low + j <= high - j; ++j)
        if (coefficient(low + j) != coefficient(high - j)) return false;
    return true;
}

std::string LPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : coeffs_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || deg == 0) os << a.get_str();
        if (deg != 0) {
            if (a != 1) os << "*";
            os << "L";
            if (deg != 1) os << "^" << deg;
        }
    }
    return os.str();
}

std::string LPoly::to_json_text() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [deg, c] : coeffs_) j[std::to_string(deg)] = c.get_str();
    return j.dump();
}

LPoly lpoly_from_coeffs(LPoly::Coeffs raw) {
    LPoly p;
    for (auto& [deg, c] : raw)
        if (c != 0) p.coeffs_.emplace(deg, std::move(c));
    return p;
}

LPoly lpoly_from_json_text(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("LPoly JSON must be an object");
    static const std::regex int_re(R"(^-?[0-9]+$)");
    LPoly::Coeffs raw;
    for (const auto& [key, val] : j.items()) {
        if (!std::regex_match(key, int_re))
            throw std::invalid_argument("LPoly JSON key is not an integer: " + key);
        if (!val.is_string() || !std::regex_match(val.get<std::string>(), int_re))
            throw std::invalid_argument("LPoly JSON coefficient must be a decimal string");
        raw[std::stol(key)] = mpz_class(val.get<std::string>());
    }
    return lpoly_from_coeffs(std::move(raw));
}

}  // namespace motivic
