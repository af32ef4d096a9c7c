#include "latticeq/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "latticeq/error.hpp"

namespace latticeq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PartsMismatch: return "PartsMismatch";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotASquarePath: return "NotASquarePath";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotABadPath: return "NotABadPath";
    case ErrorCode::WrongEndpoint: return "WrongEndpoint";
  }
  return "UnknownError";
}

QPoly::QPoly(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) {
  normalize();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::monomial(std::size_t power, BigInt c) {
  std::vector<BigInt> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return QPoly(std::move(coeffs));
}

std::optional<std::size_t> QPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt QPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> coeffs(k, BigInt(0));
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(coeffs));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return QPoly(std::move(out));
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<BigInt> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return QPoly(std::move(out));
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "divisor is the zero polynomial");
  if (a.is_zero()) return {};

  std::vector<BigInt> rem = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  if (rem.size() - 1 < db) {
    throw Error(ErrorCode::NonExactDivision, to_string(a) + " / " + to_string(b));
  }

  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + db];
    if (top == 0) continue;
    BigInt r;
    boost::multiprecision::divide_qr(top, lead, quot[i], r);
    if (r != 0) {
      throw Error(ErrorCode::NonExactDivision, to_string(a) + " / " + to_string(b));
    }
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= quot[i] * d[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw Error(ErrorCode::NonExactDivision, to_string(a) + " / " + to_string(b));
  }
  return QPoly(std::move(quot));
}

QPoly q_int(std::size_t n) { return QPoly(std::vector<BigInt>(n, BigInt(1))); }

QPoly q_factorial(std::size_t n) {
  QPoly out = QPoly::one();
  for (std::size_t i = 2; i <= n; ++i) out = mul(out, q_int(i));
  return out;
}

QPoly q_binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return {};
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  return exact_div(q_factorial(ua), mul(q_factorial(ub), q_factorial(ua - ub)));
}

QPoly q_multinomial(std::size_t total, std::span<const std::size_t> parts) {
  const std::size_t sum = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  if (sum != total) {
    throw Error(ErrorCode::PartsMismatch,
                "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(total));
  }
  QPoly denom = QPoly::one();
  for (std::size_t p : parts) denom = mul(denom, q_factorial(p));
  return exact_div(q_factorial(total), denom);
}

QPoly q_multinomial(std::size_t total, std::initializer_list<std::size_t> parts) {
  return q_multinomial(total, std::span<const std::size_t>(parts.begin(), parts.size()));
}

BigInt eval_at_one(const QPoly& p) {
  BigInt sum = 0;
  for (const auto& c : p.coefficients()) sum += c;
  return sum;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string to_json(const QPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr.dump();
}

QPoly from_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& entry : arr) coeffs.emplace_back(entry.get<std::string>());
  return QPoly(std::move(coeffs));
}

}  // namespace latticeq
