#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace garside {

  //! Arithmetic of a field whose elements are plain values.  The field object
  //! carries whatever runtime data the arithmetic needs (e.g. the modulus).
  template <typename F>
  concept Field = requires(F const& f, typename F::value_type const& a,
                           long long n) {
    { f.zero() } -> std::convertible_to<typename F::value_type>;
    { f.one() } -> std::convertible_to<typename F::value_type>;
    { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
    { f.inv(a) } -> std::convertible_to<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.from_integer(n) } -> std::convertible_to<typename F::value_type>;
    { f == f } -> std::convertible_to<bool>;
  };

  inline bool is_prime(std::uint64_t p) {
    if (p < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  //! The prime field F_p, p < 2^31.
  class PrimeField {
   public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : _p(p) {
      if (p >= (std::uint32_t(1) << 31) || !is_prime(p)) {
        throw InputError(std::to_string(p) + " is not a supported prime");
      }
    }

    std::uint32_t characteristic() const noexcept {
      return _p;
    }

    value_type zero() const noexcept {
      return 0;
    }
    value_type one() const noexcept {
      return 1;
    }
    value_type add(value_type a, value_type b) const noexcept {
      auto s = a + b;
      return s >= _p ? s - _p : s;
    }
    value_type sub(value_type a, value_type b) const noexcept {
      return a >= b ? a - b : a + _p - b;
    }
    value_type mul(value_type a, value_type b) const noexcept {
      return static_cast<value_type>(std::uint64_t(a) * b % _p);
    }
    value_type inv(value_type a) const {
      if (a == 0) {
        throw PreconditionError("inverse of zero");
      }
      // a^(p-2)
      std::uint64_t result = 1, base = a, e = _p - 2;
      while (e > 0) {
        if (e & 1) {
          result = result * base % _p;
        }
        base = base * base % _p;
        e >>= 1;
      }
      return static_cast<value_type>(result);
    }
    bool is_zero(value_type a) const noexcept {
      return a == 0;
    }
    value_type from_integer(long long n) const noexcept {
      auto r = n % static_cast<long long>(_p);
      return static_cast<value_type>(r < 0 ? r + _p : r);
    }
    std::string format(value_type a) const {
      return std::to_string(a);
    }

    bool operator==(PrimeField const&) const = default;

   private:
    std::uint32_t _p;
  };

  //! The rationals, exact.
  class RationalField {
   public:
    using value_type = boost::multiprecision::cpp_rational;

    value_type zero() const {
      return 0;
    }
    value_type one() const {
      return 1;
    }
    value_type add(value_type const& a, value_type const& b) const {
      return a + b;
    }
    value_type sub(value_type const& a, value_type const& b) const {
      return a - b;
    }
    value_type mul(value_type const& a, value_type const& b) const {
      return a * b;
    }
    value_type inv(value_type const& a) const {
      if (a == 0) {
        throw PreconditionError("inverse of zero");
      }
      return 1 / a;
    }
    bool is_zero(value_type const& a) const {
      return a == 0;
    }
    value_type from_integer(long long n) const {
      return value_type(n);
    }
    std::string format(value_type const& a) const {
      return a.str();
    }

    bool operator==(RationalField const&) const = default;
  };

  static_assert(Field<PrimeField>);
  static_assert(Field<RationalField>);

}  // namespace garside
