#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tamecover {

/// F_{p^f} presented as F_p[x]/(modulus). The modulus is chosen
/// deterministically: the first irreducible monic polynomial of degree f in
/// lexicographic order of the coefficient tuple (c_0, ..., c_{f-1}), so that
/// enumeration order is reproducible across runs.
///
/// Elements are encoded as integers in [0, p^f): the base-p digits of the
/// code are the coefficients of the residue polynomial, constant term first.
class FqField {
public:
    FqField(std::uint64_t p, unsigned f);

    std::uint64_t p() const { return p_; }
    unsigned f() const { return f_; }
    std::uint64_t size() const { return size_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const; // a != 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // Embedding of F_p, i.e. the constant polynomial c mod p.
    std::uint64_t from_int(std::uint64_t c) const { return c % p_; }

    // The set {x : x^s = x} for s = p^k | p^f, i.e. the subfield with s
    // elements, sorted by code. Throws if s does not give a subfield.
    std::vector<std::uint64_t> subfield(std::uint64_t s) const;

    std::string element_str(std::uint64_t a) const;

    bool operator==(const FqField& o) const { return p_ == o.p_ && f_ == o.f_; }

private:
    std::uint64_t p_;
    unsigned f_;
    std::uint64_t size_;
    std::vector<std::uint64_t> modulus_;          // monic, degree f, coeffs in [0,p)
    std::vector<std::vector<std::uint64_t>> red_; // x^{f+k} mod modulus, k < f-1

    void decode(std::uint64_t a, std::uint64_t* out) const;
    std::uint64_t encode(const std::uint64_t* digits) const;
};

bool is_prime(std::uint64_t n);

// Factors a prime power q = p^h; throws std::invalid_argument otherwise.
void factor_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& h);

/// Value in a shared field. Arithmetic between elements of different fields
/// is a logic error and asserts.
class FqElem {
public:
    FqElem() = default;
    FqElem(std::shared_ptr<const FqField> field, std::uint64_t code)
        : field_(std::move(field)), code_(code) {}

    std::uint64_t code() const { return code_; }
    const FqField& field() const { return *field_; }
    std::shared_ptr<const FqField> field_ptr() const { return field_; }
    bool is_zero() const { return code_ == 0; }

    FqElem operator+(const FqElem& o) const { return with(field().add(code_, o.code_)); }
    FqElem operator-(const FqElem& o) const { return with(field().sub(code_, o.code_)); }
    FqElem operator*(const FqElem& o) const { return with(field().mul(code_, o.code_)); }
    FqElem operator-() const { return with(field().neg(code_)); }
    FqElem inverse() const { return with(field().inv(code_)); }
    FqElem pow(std::uint64_t e) const { return with(field().pow(code_, e)); }

    bool operator==(const FqElem& o) const { return code_ == o.code_; }
    bool operator!=(const FqElem& o) const { return code_ != o.code_; }

private:
    FqElem with(std::uint64_t c) const { return FqElem(field_, c); }

    std::shared_ptr<const FqField> field_;
    std::uint64_t code_ = 0;
};

} // namespace tamecover
