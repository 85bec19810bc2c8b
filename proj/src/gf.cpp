#include "cyclocode/gf.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclocode {

struct FieldTables {
    std::vector<felem> add, mul, neg, inv;
};

namespace {

constexpr std::uint32_t kTableLimit = 256;  // tables above this get slow to build and big to keep

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t mod) {
    std::uint64_t acc = 1, b = base % mod;
    while (exp) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

// GF(4) as F2[u]/(u^2+u+1); element code = bit1*u + bit0.
felem gf4_mul(felem a, felem b) {
    unsigned a1 = a >> 1, a0 = a & 1, b1 = b >> 1, b0 = b & 1;
    unsigned uu = a1 & b1;  // u^2 = u + 1
    unsigned hi = (a1 & b0) ^ (a0 & b1) ^ uu;
    unsigned lo = (a0 & b0) ^ uu;
    return static_cast<felem>((hi << 1) | lo);
}

}  // namespace

FieldSpec make_field(std::uint32_t order) {
    bool ok = order == 2 || order == 4 ||
              (order % 2 == 1 && order <= 65536 && is_prime(order));
    if (!ok)
        throw std::invalid_argument("unsupported field order " + std::to_string(order));

    FieldSpec f;
    f.order_ = order;
    f.char_ = (order == 4) ? 2 : order;

    if (order <= kTableLimit) {
        auto t = std::make_shared<FieldTables>();
        const std::uint32_t l = order;
        t->add.resize(l * l);
        t->mul.resize(l * l);
        t->neg.resize(l);
        t->inv.assign(l, 0);
        for (std::uint32_t a = 0; a < l; ++a) {
            for (std::uint32_t b = 0; b < l; ++b) {
                if (order == 4) {
                    t->add[a * l + b] = static_cast<felem>(a ^ b);
                    t->mul[a * l + b] = gf4_mul(static_cast<felem>(a), static_cast<felem>(b));
                } else {
                    t->add[a * l + b] = static_cast<felem>((a + b) % l);
                    t->mul[a * l + b] = static_cast<felem>(a * b % l);
                }
                if (t->mul[a * l + b] == 1) t->inv[a] = static_cast<felem>(b);
            }
            t->neg[a] = (order == 4) ? static_cast<felem>(a)
                                     : static_cast<felem>((l - a) % l);
        }
        f.tables_ = std::move(t);
    }
    return f;
}

void FieldSpec::check_elem(felem a) const {
    if (a >= order_)
        throw std::out_of_range("element code " + std::to_string(a) +
                                " out of range for GF(" + std::to_string(order_) + ")");
}

felem FieldSpec::add(felem a, felem b) const {
    check_elem(a);
    check_elem(b);
    if (tables_) return tables_->add[a * order_ + b];
    return static_cast<felem>((static_cast<std::uint32_t>(a) + b) % order_);
}

felem FieldSpec::neg(felem a) const {
    check_elem(a);
    if (tables_) return tables_->neg[a];
    return static_cast<felem>((order_ - a) % order_);
}

felem FieldSpec::sub(felem a, felem b) const { return add(a, neg(b)); }

felem FieldSpec::mul(felem a, felem b) const {
    check_elem(a);
    check_elem(b);
    if (tables_) return tables_->mul[a * order_ + b];
    return static_cast<felem>(static_cast<std::uint64_t>(a) * b % order_);
}

felem FieldSpec::inv(felem a) const {
    check_elem(a);
    if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(order_) + ")");
    if (tables_) return tables_->inv[a];
    return static_cast<felem>(pow_mod(a, order_ - 2, order_));
}

felem FieldSpec::from_int(std::int64_t v) const {
    std::int64_t c = char_;
    std::int64_t r = v % c;
    if (r < 0) r += c;
    return static_cast<felem>(r);  // for GF(4) this is 0 or 1, both valid codes
}

std::string FieldSpec::token(felem a) const {
    check_elem(a);
    if (order_ == 4) {
        static const char* names[] = {"0", "1", "u", "u+1"};
        return names[a];
    }
    return std::to_string(a);
}

std::string FieldSpec::file_token(felem a) const {
    check_elem(a);
    if (order_ == 4) {
        static const char* names[] = {"0", "1", "u", "v"};
        return names[a];
    }
    return std::to_string(a);
}

felem FieldSpec::parse_token(std::string_view tok) const {
    if (order_ == 4) {
        if (tok == "0") return 0;
        if (tok == "1") return 1;
        if (tok == "u" || tok == "2") return 2;
        if (tok == "v" || tok == "u+1" || tok == "3") return 3;
        throw std::invalid_argument("bad GF(4) token '" + std::string(tok) + "'");
    }
    std::uint32_t v = 0;
    if (tok.empty()) throw std::invalid_argument("empty field token");
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad GF(" + std::to_string(order_) + ") token '" +
                                        std::string(tok) + "'");
        v = v * 10 + static_cast<std::uint32_t>(c - '0');
        if (v >= order_)
            throw std::invalid_argument("token '" + std::string(tok) + "' out of range for GF(" +
                                        std::to_string(order_) + ")");
    }
    return static_cast<felem>(v);
}

}  // namespace cyclocode
