#include "lrc/construction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lrc {

int ConstructionParams::length() const {
    long long n = 1;
    for (int ni : lengths) {
        n *= ni;
        if (n > (1 << 20)) throw ParamError("code length exceeds the supported maximum");
    }
    return static_cast<int>(n);
}

void ConstructionParams::validate() const {
    if (lengths.empty()) throw ParamError("at least one local length n_i is required");
    if (rhos.size() != lengths.size())
        throw ParamError("expected " + std::to_string(lengths.size()) + " local distances, got " +
                         std::to_string(rhos.size()));
    if (!offsets.empty() && offsets.size() != lengths.size())
        throw ParamError("expected " + std::to_string(lengths.size()) + " offsets b_i, got " +
                         std::to_string(offsets.size()));
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const int ni = lengths[i];
        if (ni < 2) throw ParamError("n_" + std::to_string(i + 1) + " = " + std::to_string(ni) + " must be at least 2");
        for (std::size_t j = 0; j < i; ++j)
            if (std::gcd(ni, lengths[j]) != 1)
                throw ParamError("n_" + std::to_string(j + 1) + " = " + std::to_string(lengths[j]) + " and n_" +
                                 std::to_string(i + 1) + " = " + std::to_string(ni) + " are not coprime");
        if (rhos[i] < 2 || rhos[i] > ni)
            throw ParamError("rho_" + std::to_string(i + 1) + " = " + std::to_string(rhos[i]) + " must lie in [2, " +
                             std::to_string(ni) + "]");
        if (std::gcd(offset(i), ni) != 1)
            throw ParamError("b_" + std::to_string(i + 1) + " = " + std::to_string(offset(i)) +
                             " is not coprime to n_" + std::to_string(i + 1));
    }
    const int n = length();
    for (int e : global)
        if (e < 0 || e >= n)
            throw ParamError("global exponent " + std::to_string(e) + " outside [0, " + std::to_string(n - 1) + "]");
    if (field_order) {
        const auto pp = gf::as_prime_power(*field_order);
        if (!pp) throw ParamError("field order " + std::to_string(*field_order) + " is not a prime power");
        if (*field_order > gf::kMaxFieldOrder) throw ParamError("field order exceeds the size cap 2^20");
        if ((*field_order - 1) % static_cast<std::uint32_t>(n) != 0)
            throw ParamError("n = " + std::to_string(n) + " does not divide q - 1 = " +
                             std::to_string(*field_order - 1));
    }
}

DefiningSet::DefiningSet(int modulus, const std::vector<int>& exponents) : modulus_(modulus) {
    if (modulus < 1) throw ParamError("defining set modulus must be positive");
    exps_.reserve(exponents.size());
    for (int e : exponents) exps_.push_back(((e % modulus) + modulus) % modulus);
    std::sort(exps_.begin(), exps_.end());
    exps_.erase(std::unique(exps_.begin(), exps_.end()), exps_.end());
}

bool DefiningSet::contains(int e) const {
    e = ((e % modulus_) + modulus_) % modulus_;
    return std::binary_search(exps_.begin(), exps_.end(), e);
}

std::vector<bool> DefiningSet::indicator() const {
    std::vector<bool> in(static_cast<std::size_t>(modulus_), false);
    for (int e : exps_) in[static_cast<std::size_t>(e)] = true;
    return in;
}

DefiningSet DefiningSet::unite(const DefiningSet& other) const {
    if (other.modulus_ != modulus_) throw ParamError("defining sets with different moduli");
    std::vector<int> all = exps_;
    all.insert(all.end(), other.exps_.begin(), other.exps_.end());
    return DefiningSet(modulus_, all);
}

DefiningSet DefiningSet::intersect(const DefiningSet& other) const {
    if (other.modulus_ != modulus_) throw ParamError("defining sets with different moduli");
    std::vector<int> common;
    std::set_intersection(exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end(),
                          std::back_inserter(common));
    return DefiningSet(modulus_, common);
}

std::string to_string(const DefiningSet& d) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d.exponents()[i];
    os << "}";
    return os.str();
}

DefiningSet local_defining_set(const ConstructionParams& params, std::size_t i) {
    if (i >= params.t())
        throw ParamError("local index " + std::to_string(i + 1) + " out of range [1, " + std::to_string(params.t()) +
                         "]");
    const int n = params.length();
    const int ni = params.lengths[i];
    const long long b = params.offset(i);
    std::vector<int> exps;
    for (int j = 0; j < n / ni; ++j)
        for (int s = 0; s <= params.rhos[i] - 2; ++s) {
            const long long e = static_cast<long long>(j) * ni + s * b + params.shift;
            exps.push_back(static_cast<int>(((e % n) + n) % n));
        }
    return DefiningSet(n, exps);
}

DefiningSet local_union(const ConstructionParams& params) {
    DefiningSet d(params.length());
    for (std::size_t i = 0; i < params.t(); ++i) d = d.unite(local_defining_set(params, i));
    return d;
}

DefiningSet full_defining_set(const ConstructionParams& params) {
    params.validate();
    return local_union(params).unite(DefiningSet(params.length(), params.global));
}

gf::FieldPtr field_for(const ConstructionParams& params) {
    params.validate();
    const auto n = static_cast<std::uint32_t>(params.length());
    if (params.field_order) {
        const auto pp = gf::as_prime_power(*params.field_order);
        return gf::field_new(pp->p, pp->m);
    }
    return gf::find_field_for_length(n);
}

CyclicLRC::CyclicLRC(gf::FieldPtr field, DefiningSet defining_set)
    : field_(std::move(field)),
      n_(defining_set.modulus()),
      k_(n_ - static_cast<int>(defining_set.size())),
      d_(std::move(defining_set)),
      g_(field_) {
    const auto& f = *field_;
    alpha_ = f.nth_root_of_unity(static_cast<std::uint32_t>(n_));

    g_ = gf::Poly::constant(field_, f.one());
    for (int e : d_.exponents()) {
        const gf::Elem root = f.pow(alpha_, e);
        g_ = gf::poly_mul(g_, gf::Poly(field_, {f.neg(root), f.one()}));
    }

    gen_ = Matrix(field_, static_cast<std::size_t>(k_), static_cast<std::size_t>(n_));
    for (int i = 0; i < k_; ++i)
        for (std::size_t j = 0; j < g_.coeffs().size(); ++j)
            gen_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + j) = g_.coeffs()[j];

    if (k_ > 0) {
        parity_ = null_space(gen_);
    } else {
        parity_ = Matrix(field_, static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) parity_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = f.one();
    }
}

Matrix CyclicLRC::systematic_generator() const { return row_reduce(gen_).matrix; }

std::vector<gf::Elem> CyclicLRC::encode(const std::vector<gf::Elem>& message) const {
    if (message.size() != static_cast<std::size_t>(k_))
        throw ParamError("message length " + std::to_string(message.size()) + " does not match dimension " +
                         std::to_string(k_));
    const auto& f = *field_;
    std::vector<gf::Elem> word(static_cast<std::size_t>(n_), gf::Elem{0});
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i].value == 0) continue;
        for (std::size_t j = 0; j < g_.coeffs().size(); ++j) {
            const std::size_t pos = (i + j) % static_cast<std::size_t>(n_);
            word[pos] = f.add(word[pos], f.mul(message[i], g_.coeffs()[j]));
        }
    }
    return word;
}

bool CyclicLRC::is_codeword(const std::vector<gf::Elem>& word) const {
    if (word.size() != static_cast<std::size_t>(n_))
        throw ParamError("word length " + std::to_string(word.size()) + " does not match code length " +
                         std::to_string(n_));
    const gf::Poly w(field_, word);
    for (int e : d_.exponents())
        if (w.eval(field_->pow(alpha_, e)).value != 0) return false;
    return true;
}

CyclicLRC build_code(const ConstructionParams& params) {
    auto field = field_for(params);
    return CyclicLRC(std::move(field), full_defining_set(params));
}

}  // namespace lrc
