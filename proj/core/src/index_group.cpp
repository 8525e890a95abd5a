#include "wittmod/index_group.hpp"

#include <algorithm>
#include <sstream>

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

constexpr std::size_t kParityColumn = 2;

mpz_class floor_q(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_q(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long to_long(const mpz_class& x) {
  if (!x.fits_slong_p()) {
    throw Error(ErrorCode::invalid_argument, "coordinate does not fit in a machine integer");
  }
  return x.get_si();
}

}  // namespace

std::string GroupElement::to_string() const {
  return parity == Parity::odd ? value.to_string() + " odd" : value.to_string();
}

bool GroupElementLess::operator()(const GroupElement& a, const GroupElement& b) const {
  if (a.parity != b.parity) {
    return a.parity < b.parity;
  }
  return lex_compare(a.value, b.value) < 0;
}

std::shared_ptr<const IndexGroup> IndexGroup::build(std::vector<GroupElement> generators,
                                                    bool super_mode) {
  if (generators.empty()) {
    throw Error(ErrorCode::invalid_argument, "an index group needs at least one generator");
  }
  std::shared_ptr<IndexGroup> g(new IndexGroup());
  g->super_ = super_mode;
  g->generators_ = generators;

  mpz_class den = 1;
  for (const auto& x : generators) {
    if (!super_mode && x.parity == Parity::odd) {
      throw Error(ErrorCode::parity_inconsistent,
                  "odd generator " + x.to_string() + " in a non-super group");
    }
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.value.real().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.value.imag().get_den_mpz_t());
  }
  g->denominator_ = den;

  const std::size_t dim = super_mode ? 3 : 2;
  std::vector<IntVector> rows;
  for (const auto& x : generators) {
    rows.push_back(*g->embed(x.value, x.parity));
  }
  if (super_mode) {
    // (0, even) = 2 * (0, odd): the parity coordinate only matters mod 2.
    rows.push_back({0, 0, 2});
  }
  g->lattice_.emplace(std::move(rows), dim);

  const auto& hnf = *g->lattice_;
  for (std::size_t r = 0; r < hnf.rank(); ++r) {
    const auto& row = hnf.rows()[r];
    if (hnf.pivots()[r] < kParityColumn) {
      Parity p = Parity::even;
      if (super_mode && mpz_odd_p(row[kParityColumn].get_mpz_t())) {
        p = Parity::odd;
      }
      g->basis_.push_back(
          {GaussianRational(make_rational(row[0], den), make_rational(row[1], den)), p});
      ++g->value_rank_;
    } else if (row[kParityColumn] == 1) {
      g->torsion_ = true;
    }
  }
  if (g->torsion_) {
    g->basis_.push_back({GaussianRational(0), Parity::odd});
  }
  if (!g->contains(GaussianRational(1), Parity::even)) {
    throw Error(ErrorCode::group_missing_one, "generators " + g->to_string() + " do not span 1");
  }
  return g;
}

std::optional<IntVector> IndexGroup::embed(const GaussianRational& x, Parity parity) const {
  const Rational re = x.real() * denominator_;
  const Rational im = x.imag() * denominator_;
  if (re.get_den() != 1 || im.get_den() != 1) {
    return std::nullopt;
  }
  IntVector v{re.get_num(), im.get_num()};
  if (super_) {
    v.emplace_back(as_int(parity));
  } else if (parity == Parity::odd) {
    return std::nullopt;
  }
  return v;
}

bool IndexGroup::contains(const GaussianRational& x, Parity parity) const {
  const auto v = embed(x, parity);
  return v && lattice_->solve(*v).has_value();
}

std::optional<std::vector<long>> IndexGroup::try_coordinates(const GroupElement& x) const {
  const auto v = embed(x.value, x.parity);
  if (!v) {
    return std::nullopt;
  }
  const auto sol = lattice_->solve(*v);
  if (!sol) {
    return std::nullopt;
  }
  std::vector<long> coords;
  coords.reserve(basis_.size());
  for (std::size_t r = 0; r < value_rank_; ++r) {
    coords.push_back(to_long((*sol)[r]));
  }
  if (torsion_) {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), (*sol)[value_rank_].get_mpz_t(), 2);
    coords.push_back(t.get_si());
  }
  return coords;
}

std::vector<long> IndexGroup::coordinates(const GroupElement& x) const {
  auto c = try_coordinates(x);
  if (!c) {
    throw Error(ErrorCode::not_in_group, x.to_string() + " is not in " + to_string());
  }
  return std::move(*c);
}

GroupElement IndexGroup::element(const GaussianRational& x, Parity parity) const {
  if (!contains(x, parity)) {
    throw Error(ErrorCode::not_in_group, GroupElement{x, parity}.to_string() + " is not in " + to_string());
  }
  return {x, parity};
}

std::vector<GroupElement> IndexGroup::window(const Rational& bound) const {
  const auto& rows = lattice_->rows();
  const Rational limit = bound * denominator_;
  std::vector<GroupElement> out;

  auto emit = [&](const mpz_class& re, const mpz_class& im, long parity_sum) {
    GaussianRational value(make_rational(re, denominator_), make_rational(im, denominator_));
    if (!super_) {
      out.push_back({value, Parity::even});
    } else if (torsion_) {
      out.push_back({value, Parity::even});
      out.push_back({value, Parity::odd});
    } else {
      out.push_back({value, (parity_sum % 2 != 0) ? Parity::odd : Parity::even});
    }
  };
  auto row_parity = [&](std::size_t r) -> long {
    return super_ ? rows[r][kParityColumn].get_si() : 0;
  };

  // Row 0 always pivots on the real column because (1, even) is a member.
  const mpz_class& a = rows[0][0];
  const mpz_class& b = rows[0][1];
  const mpz_class c0_lo = ceil_q(-limit / a);
  const mpz_class c0_hi = floor_q(limit / a);
  for (mpz_class c0 = c0_lo; c0 <= c0_hi; ++c0) {
    const mpz_class re = c0 * a;
    const mpz_class im0 = c0 * b;
    const long par0 = c0.get_si() * row_parity(0);
    if (value_rank_ == 2) {
      const mpz_class& c = rows[1][1];
      const mpz_class lo = ceil_q(Rational(-limit - im0) / c);
      const mpz_class hi = floor_q(Rational(limit - im0) / c);
      for (mpz_class c1 = lo; c1 <= hi; ++c1) {
        emit(re, im0 + c1 * c, std::abs(par0 + c1.get_si() * row_parity(1)));
      }
    } else if (abs(im0) <= limit) {
      emit(re, im0, std::abs(par0));
    }
  }
  std::sort(out.begin(), out.end(), GroupElementLess{});
  return out;
}

bool IndexGroup::scaling_is_valid(const GaussianRational& a, bool super_mode) const {
  if (a.is_zero()) {
    return false;
  }
  if (super_mode) {
    const int re = sgn(a.real());
    if (re < 0 || (re == 0 && sgn(a.imag()) <= 0)) {
      return false;
    }
  }
  const GaussianRational s = super_mode ? a * a : a;
  const GaussianRational s_inv = s.inverse();
  for (std::size_t r = 0; r < value_rank_; ++r) {
    const auto& e = basis_[r];
    if (!contains(s * e.value, e.parity) || !contains(s_inv * e.value, e.parity)) {
      return false;
    }
  }
  return true;
}

bool IndexGroup::is_subgroup_of(const IndexGroup& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const GroupElement& e) { return other.contains(e); });
}

std::string IndexGroup::to_string() const {
  std::ostringstream os;
  os << '<';
  const auto& shown = basis_.empty() ? generators_ : basis_;
  for (std::size_t k = 0; k < shown.size(); ++k) {
    os << (k ? ", " : "") << shown[k].to_string();
  }
  os << '>';
  return os.str();
}

Character::Character(GroupPtr group, std::vector<GaussianRational> basis_values)
    : group_(std::move(group)), values_(std::move(basis_values)) {
  if (values_.size() != group_->basis().size()) {
    throw Error(ErrorCode::invalid_character,
                "expected " + std::to_string(group_->basis().size()) + " basis values for " +
                    group_->to_string() + ", got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.is_zero()) {
      throw Error(ErrorCode::invalid_character, "character values must be nonzero");
    }
  }
  if (group_->has_odd_torsion()) {
    const auto& t = values_.back();
    if (!(t * t == GaussianRational(1))) {
      throw Error(ErrorCode::invalid_character,
                  "the value on (0, odd) must square to 1, got " + t.to_string());
    }
  }
}

Character Character::trivial(GroupPtr group) {
  std::vector<GaussianRational> ones(group->basis().size(), GaussianRational(1));
  return {std::move(group), std::move(ones)};
}

Character Character::parity_character(GroupPtr group) {
  if (!group->is_super()) {
    throw Error(ErrorCode::not_super, "the parity character needs a super group");
  }
  std::vector<GaussianRational> values;
  for (const auto& e : group->basis()) {
    values.emplace_back(e.parity == Parity::odd ? -1 : 1);
  }
  return {std::move(group), std::move(values)};
}

GaussianRational Character::operator()(const GroupElement& x) const {
  const auto coords = group_->coordinates(x);
  GaussianRational result(1);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] != 0) {
      result *= int_pow(values_[k], coords[k]);
    }
  }
  return result;
}

Character Character::operator*(const Character& o) const {
  if (!(*group_ == *o.group_)) {
    throw Error(ErrorCode::spec_mismatch, "characters live on different groups");
  }
  std::vector<GaussianRational> values;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    values.push_back(values_[k] * o.values_[k]);
  }
  return {group_, std::move(values)};
}

bool Character::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const GaussianRational& v) { return v == GaussianRational(1); });
}

std::string Character::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < values_.size(); ++k) {
    os << (k ? ", " : "") << "f(" << group_->basis()[k].to_string() << ")=" << values_[k].to_string();
  }
  os << '}';
  return os.str();
}

bool restriction_agrees(const Character& big, const Character& small) {
  if (!small.group().is_subgroup_of(big.group())) {
    throw Error(ErrorCode::not_subgroup,
                small.group().to_string() + " is not contained in " + big.group().to_string());
  }
  const auto& basis = small.group().basis();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!(big(basis[k]) == small.basis_values()[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace wittmod
