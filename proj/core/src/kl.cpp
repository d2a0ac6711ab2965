#include "jring/kl.hpp"

#include <algorithm>

#include "jring/errors.hpp"

namespace jring {

namespace {
inline std::uint64_t pair_key(Elt a, Elt b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}
const LaurentPoly kZero;
const LaurentPoly kOne = LaurentPoly::constant(1);
}  // namespace

const LaurentPoly& KLTable::kl_poly(Elt y, Elt w) {
  auto it = p_.find(pair_key(y, w));
  if (it != p_.end()) return it->second;
  if (!W_.bruhat_leq(y, w)) return p_.emplace(pair_key(y, w), kZero).first->second;
  if (y == w) return p_.emplace(pair_key(y, w), kOne).first->second;

  int s = W_.word(w)[0];  // left descent of w
  Elt u = W_.left_mul(s, w);
  Elt sy = W_.left_mul(s, y);

  LaurentPoly res;
  if (W_.length(sy) > W_.length(y)) {
    res = kl_poly(sy, w);
  } else {
    LaurentPoly p1 = kl_poly(sy, u);
    LaurentPoly p2 = kl_poly(y, u);
    res = p1 + p2.shifted(1);  // shift in q
    for (Elt z = 0; z < W_.size(); ++z) {
      if (W_.length(z) >= W_.length(u)) break;
      if ((W_.length(u) - W_.length(z)) % 2 == 0) continue;
      if (W_.length(W_.left_mul(s, z)) > W_.length(z)) continue;
      if (!W_.bruhat_leq(y, z) || !W_.bruhat_leq(z, u)) continue;
      long m = mu(z, u);
      if (m == 0) continue;
      res -= (kl_poly(y, z) * Int(m)).shifted((W_.length(w) - W_.length(z)) / 2);
    }
  }
  if (!res.is_zero() && 2 * res.highest() > W_.length(w) - W_.length(y) - 1)
    throw structural_error("KL polynomial exceeds its degree bound");
  return p_.emplace(pair_key(y, w), std::move(res)).first->second;
}

long KLTable::mu(Elt y, Elt w) {
  if (y == w) return 0;
  if (W_.bruhat_leq(y, w)) {
    int d = W_.length(w) - W_.length(y);
    if (d % 2 == 0) return 0;
    return static_cast<long>(kl_poly(y, w).coeff((d - 1) / 2));
  }
  if (W_.bruhat_leq(w, y)) return mu(w, y);
  return 0;
}

const HeckeElt& KLTable::c_elt(Elt w) {
  if (c_.empty()) {
    c_.resize(W_.size());
    c_done_.assign(W_.size(), 0);
  }
  if (!c_done_[w]) {
    HeckeElt e;
    for (Elt y = 0; y <= w; ++y) {
      const LaurentPoly& p = kl_poly(y, w);
      if (!p.is_zero()) e.emplace(y, p.stretched(2).shifted(-W_.length(w)));
    }
    c_[w] = std::move(e);
    c_done_[w] = 1;
  }
  return c_[w];
}

HeckeElt KLTable::t_mul_gen(const HeckeElt& a, int s) const {
  // T_y T_s = T_{ys} if l(ys) > l(y), else (v^2-1) T_y + v^2 T_{ys}.
  static const LaurentPoly kQ = LaurentPoly::monomial(1, 2);
  static const LaurentPoly kQm1 = LaurentPoly(0, {-1, 0, 1});
  HeckeElt out;
  auto add = [&out](Elt w, LaurentPoly p) {
    if (p.is_zero()) return;
    auto [it, fresh] = out.try_emplace(w, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [y, p] : a) {
    Elt ys = W_.right_mul(y, s);
    if (W_.length(ys) > W_.length(y)) {
      add(ys, p);
    } else {
      add(y, p * kQm1);
      add(ys, p * kQ);
    }
  }
  return out;
}

HeckeElt KLTable::t_mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt acc;
  for (const auto& [t, q] : b) {
    // a * T_t by walking the reduced word of t.
    HeckeElt cur = a;
    for (std::uint8_t s : W_.word(t)) cur = t_mul_gen(cur, s);
    for (const auto& [w, p] : cur) {
      LaurentPoly term = p * q;
      if (term.is_zero()) continue;
      auto [it, fresh] = acc.try_emplace(w, term);
      if (!fresh) {
        it->second += term;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return acc;
}

namespace {

// Triangular back-substitution of a T-basis element into the c-basis.
HRow to_c_basis(KLTable& kl, HeckeElt xi) {
  const CoxeterGroup& W = kl.group();
  HRow out;
  while (!xi.empty()) {
    Elt z = xi.rbegin()->first;
    LaurentPoly h = xi.rbegin()->second.shifted(W.length(z));
    for (const auto& [y, p] : kl.c_elt(z)) {
      LaurentPoly term = h * p;
      if (term.is_zero()) continue;
      auto it = xi.find(y);
      if (it == xi.end()) it = xi.emplace(y, LaurentPoly()).first;
      it->second -= term;
      if (it->second.is_zero()) xi.erase(it);
    }
    if (!h.nonnegative())
      throw structural_error("negative coefficient in a c-basis product");
    out.emplace_back(z, std::move(h));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

const HRow& HTable::c_product(Elt x, Elt y) {
  auto it = rows_.find(pair_key(x, y));
  if (it != rows_.end()) return it->second;
  HeckeElt prod = kl_.t_mul(kl_.c_elt(x), kl_.c_elt(y));
  HRow row = to_c_basis(kl_, std::move(prod));
  return rows_.emplace(pair_key(x, y), std::move(row)).first->second;
}

void HTable::fill_all() {
  if (filled_) return;
  const CoxeterGroup& W = group();
  const Elt n = W.size();

  for (Elt x = 0; x < n; ++x) {
    // Batch: c_x * T_t for every t, children extend parents by one letter.
    std::vector<HeckeElt> prods(n);
    prods[0] = kl_.c_elt(x);
    for (Elt t = 1; t < n; ++t) {
      int s = W.word(t).back();
      Elt parent = W.right_mul(t, s);
      prods[t] = kl_.t_mul_gen(prods[parent], s);
    }
    for (Elt y = 0; y < n; ++y) {
      if (rows_.contains(pair_key(x, y))) continue;
      HeckeElt acc;
      for (const auto& [t, q] : kl_.c_elt(y)) {
        for (const auto& [w, p] : prods[t]) {
          LaurentPoly term = p * q;
          if (term.is_zero()) continue;
          auto [it, fresh] = acc.try_emplace(w, term);
          if (!fresh) {
            it->second += term;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      }
      rows_.emplace(pair_key(x, y), to_c_basis(kl_, std::move(acc)));
    }
  }

  a_.assign(n, 0);
  for (const auto& [key, row] : rows_) {
    (void)key;
    for (const auto& [z, h] : row) a_[z] = std::max(a_[z], h.highest());
  }
  filled_ = true;
}

int HTable::a_value(Elt z) const {
  if (!filled_) throw structural_error("a-values need the full product scan");
  return a_[z];
}

long HTable::gamma(Elt x, Elt y, Elt z) {
  Elt zi = group().inverse(z);
  const HRow& row = c_product(x, y);
  for (const auto& [w, h] : row)
    if (w == zi) return static_cast<long>(h.coeff(a_value(zi)));
  return 0;
}

GammaTable::GammaTable(HTable& h) : W_(h.group()) {
  h.fill_all();
  a_ = h.a_values();
  const Elt n = W_.size();
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      std::vector<std::pair<Elt, long>> row;
      for (const auto& [z, hp] : h.c_product(x, y)) {
        Int top = hp.coeff(a_[z]);
        if (hp.highest() > a_[z])
          throw structural_error("h-degree exceeds the a-value of its target");
        if (top != 0) row.emplace_back(z, static_cast<long>(top));
      }
      if (!row.empty()) prod_.emplace(pair_key(x, y), std::move(row));
    }
}

const std::vector<std::pair<Elt, long>>* GammaTable::product(Elt x, Elt y) const {
  auto it = prod_.find(pair_key(x, y));
  return it == prod_.end() ? nullptr : &it->second;
}

long GammaTable::gamma(Elt x, Elt y, Elt u) const {
  const auto* row = product(x, y);
  if (!row) return 0;
  Elt z = W_.inverse(u);
  for (const auto& [w, g] : *row)
    if (w == z) return g;
  return 0;
}

const std::vector<Elt>& GammaTable::find_distinguished(
    const std::vector<std::vector<Elt>>& left_cells) {
  dist_.clear();
  is_dist_.assign(W_.size(), 0);
  for (const auto& cell : left_cells) {
    Elt found = 0;
    int count = 0;
    for (Elt d : cell) {
      bool ok = true;
      for (Elt x : cell) {
        if (gamma(W_.inverse(x), x, d) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        found = d;
        ++count;
      }
    }
    if (count != 1)
      throw structural_error("left cell without a unique distinguished involution");
    if (W_.inverse(found) != found)
      throw structural_error("distinguished element is not an involution");
    for (Elt x : cell)
      if (gamma(W_.inverse(x), x, found) != 1)
        throw structural_error("distinguished involution with gamma != 1");
    dist_.push_back(found);
    is_dist_[found] = 1;
  }
  std::sort(dist_.begin(), dist_.end());

  // sum_d t_d must be a two-sided unit, exactly.
  for (Elt x = 0; x < W_.size(); ++x) {
    std::map<Elt, long> left, right;
    for (Elt d : dist_) {
      if (const auto* row = product(d, x))
        for (const auto& [z, g] : *row) left[z] += g;
      if (const auto* row = product(x, d))
        for (const auto& [z, g] : *row) right[z] += g;
    }
    std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
    const std::map<Elt, long> expect{{x, 1}};
    if (left != expect || right != expect)
      throw structural_error("sum of distinguished t_d is not a two-sided unit");
  }
  return dist_;
}

}  // namespace jring
