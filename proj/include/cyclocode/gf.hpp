#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace cyclocode {

/// Element code. Codes run 0..l-1; for prime l code c is the residue c,
/// for GF(4) codes 0,1,2,3 stand for 0, 1, u, u+1 with u^2 + u + 1 = 0.
using felem = std::uint16_t;

/// Arithmetic context for GF(l), l in {2,3,4} or an odd prime <= 2^16.
/// Immutable after construction; cheap to copy.
class FieldSpec {
  public:
    FieldSpec() = default;  // empty shell; make_field() produces usable contexts

    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return char_; }

    felem add(felem a, felem b) const;
    felem sub(felem a, felem b) const;
    felem mul(felem a, felem b) const;
    felem neg(felem a) const;
    felem inv(felem a) const;  // throws std::domain_error on zero

    /// Image of an integer under repeated addition of 1 (reduction mod
    /// the characteristic; for GF(4) this lands in {0, 1}).
    felem from_int(std::int64_t v) const;

    /// Display token: "u+1" style for GF(4), decimal otherwise.
    std::string token(felem a) const;
    /// Matrix-file token: single characters, GF(4) uses "v" for u+1.
    std::string file_token(felem a) const;
    /// Accepts both token styles plus the GF(4) digit aliases 2 and 3.
    felem parse_token(std::string_view tok) const;

    bool operator==(const FieldSpec& o) const { return order_ == o.order_; }
    bool operator!=(const FieldSpec& o) const { return order_ != o.order_; }

    friend FieldSpec make_field(std::uint32_t order);

  private:
    void check_elem(felem a) const;

    std::uint32_t order_ = 0;
    std::uint32_t char_ = 0;
    // Flat l*l tables for small orders; larger prime fields fall back to
    // modular arithmetic on demand.
    std::shared_ptr<const struct FieldTables> tables_;
};

/// Builds the arithmetic context. Throws std::invalid_argument for
/// unsupported orders (composite other than 4, even other than 2/4, or
/// beyond 2^16).
FieldSpec make_field(std::uint32_t order);

}  // namespace cyclocode
