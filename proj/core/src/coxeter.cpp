#include "jring/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <unordered_map>

#include <json.hpp>

namespace jring {

namespace {

constexpr double kMatchTol = 1e-9;
constexpr double kSeparationTol = 1e-6;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct PermHash {
  size_t operator()(const std::vector<std::uint16_t>& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint16_t x : p) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

CartanDatum CartanDatum::parse(const std::string& label) {
  CartanDatum d;
  d.label = label;
  if (label.empty()) throw datum_error("empty type label");
  char family = label[0];
  int rank = 0, dihedral_m = 0;

  if (label.size() >= 2 && label.substr(0, 2) == "I2") {
    if (label.size() < 5 || label[2] != '(' || label.back() != ')')
      throw datum_error("dihedral label must look like I2(m): " + label);
    for (size_t i = 3; i + 1 < label.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(label[i])))
        throw datum_error("bad dihedral order in " + label);
      dihedral_m = dihedral_m * 10 + (label[i] - '0');
    }
    if (dihedral_m < 3) throw datum_error("I2(m) needs m >= 3");
    rank = 2;
  } else {
    for (size_t i = 1; i < label.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(label[i])))
        throw datum_error("unknown type label: " + label);
      rank = rank * 10 + (label[i] - '0');
    }
    if (rank <= 0) throw datum_error("missing rank in type label: " + label);
  }

  d.rank = rank;
  auto chain = [&](int extra_bond_at, int extra_bond) {
    d.coxeter_matrix.assign(rank, std::vector<int>(rank, 2));
    for (int i = 0; i < rank; ++i) d.coxeter_matrix[i][i] = 1;
    for (int i = 0; i + 1 < rank; ++i)
      d.coxeter_matrix[i][i + 1] = d.coxeter_matrix[i + 1][i] = 3;
    if (extra_bond_at >= 0)
      d.coxeter_matrix[extra_bond_at][extra_bond_at + 1] =
          d.coxeter_matrix[extra_bond_at + 1][extra_bond_at] = extra_bond;
  };

  switch (family) {
    case 'A':
      if (rank < 1) throw datum_error("A_n needs n >= 1");
      chain(-1, 0);
      d.expected_order = factorial(rank + 1);
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw datum_error("B_n/C_n need n >= 2");
      chain(rank - 2, 4);
      d.expected_order = (1ull << rank) * factorial(rank);
      break;
    case 'D':
      if (rank < 3) throw datum_error("D_n needs n >= 3");
      chain(-1, 0);
      // fork: last node attaches to node rank-3 instead of rank-2
      d.coxeter_matrix[rank - 2][rank - 1] = d.coxeter_matrix[rank - 1][rank - 2] = 2;
      d.coxeter_matrix[rank - 3][rank - 1] = d.coxeter_matrix[rank - 1][rank - 3] = 3;
      d.expected_order = (1ull << (rank - 1)) * factorial(rank);
      break;
    case 'E':
      if (rank != 6) throw datum_error("only E6 is supported");
      chain(-1, 0);  // 0-1-2-3-4 chain, node 5 attaches to node 2
      d.coxeter_matrix[4][5] = d.coxeter_matrix[5][4] = 2;
      d.coxeter_matrix[2][5] = d.coxeter_matrix[5][2] = 3;
      d.expected_order = 51840;
      break;
    case 'F':
      if (rank != 4) throw datum_error("only F4 is supported");
      chain(1, 4);
      d.expected_order = 1152;
      break;
    case 'G':
      if (rank != 2) throw datum_error("only G2 is supported");
      chain(0, 6);
      d.expected_order = 12;
      break;
    case 'H':
      if (rank != 3) throw datum_error("only H3 is supported");
      chain(0, 5);
      d.expected_order = 120;
      break;
    case 'I':
      chain(0, dihedral_m);
      d.expected_order = 2ull * static_cast<std::uint64_t>(dihedral_m);
      break;
    default:
      throw datum_error("unknown type label: " + label);
  }
  return d;
}

CoxeterGroup::CoxeterGroup(CartanDatum datum, std::uint64_t cap)
    : datum_(std::move(datum)), cap_(cap) {
  const int r = datum_.rank;
  gram_.assign(r, std::vector<double>(r, 0.0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram_[i][j] = (i == j) ? 1.0 : -std::cos(M_PI / datum_.coxeter_matrix[i][j]);
  build_roots();
  enumerate();
  fill_bruhat();
}

void CoxeterGroup::build_roots() {
  const int r = datum_.rank;
  auto reflect = [&](std::vector<double> x, int s) {
    double ip = 0;
    for (int j = 0; j < r; ++j) ip += x[j] * gram_[j][s];
    x[s] -= 2 * ip;
    return x;
  };
  auto find = [&](const std::vector<double>& x) -> int {
    for (size_t i = 0; i < roots_.size(); ++i) {
      double d = 0;
      for (int j = 0; j < r; ++j) d = std::max(d, std::fabs(roots_[i][j] - x[j]));
      if (d < kMatchTol) return static_cast<int>(i);
    }
    return -1;
  };

  for (int i = 0; i < r; ++i) {
    std::vector<double> e(r, 0.0);
    e[i] = 1.0;
    roots_.push_back(e);
  }
  for (size_t head = 0; head < roots_.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      auto img = reflect(roots_[head], s);
      if (find(img) < 0) roots_.push_back(std::move(img));
      if (roots_.size() > 4 * cap_)
        throw size_error("root system larger than expected for cap");
    }
  }

  // Separation check: interning keys must be well separated.
  for (size_t i = 0; i < roots_.size(); ++i)
    for (size_t j = i + 1; j < roots_.size(); ++j) {
      double d = 0;
      for (int k = 0; k < r; ++k) d = std::max(d, std::fabs(roots_[i][k] - roots_[j][k]));
      if (d < kSeparationTol)
        throw structural_error("root coordinates too close to intern reliably");
    }

  // Positive roots first (nonnegative simple coordinates), negatives aligned
  // so that root N+j is the negative of root j.
  auto positive = [&](const std::vector<double>& x) {
    for (double c : x)
      if (c < -kMatchTol) return false;
    return true;
  };
  std::vector<std::vector<double>> pos;
  for (auto& x : roots_)
    if (positive(x)) pos.push_back(x);
  std::sort(pos.begin(), pos.end());
  n_pos_ = static_cast<int>(pos.size());
  if (pos.size() * 2 != roots_.size())
    throw structural_error("root system is not symmetric under negation");
  std::vector<std::vector<double>> ordered = pos;
  for (auto& x : pos) {
    auto neg = x;
    for (double& c : neg) c = -c;
    ordered.push_back(std::move(neg));
  }
  roots_ = std::move(ordered);

  simple_root_.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    std::vector<double> e(r, 0.0);
    e[i] = 1.0;
    simple_root_[i] = find(e);
    if (simple_root_[i] < 0) throw structural_error("simple root lost in interning");
  }

  gen_perm_.assign(r, {});
  for (int s = 0; s < r; ++s) {
    gen_perm_[s].resize(roots_.size());
    for (size_t i = 0; i < roots_.size(); ++i) {
      int j = find(reflect(roots_[i], s));
      if (j < 0) throw structural_error("reflection does not permute the roots");
      gen_perm_[s][i] = static_cast<std::uint16_t>(j);
    }
  }
}

void CoxeterGroup::enumerate() {
  const int r = datum_.rank;
  const size_t nr = roots_.size();
  using Perm = std::vector<std::uint16_t>;

  std::vector<Perm> perms;
  std::unordered_map<Perm, Elt, PermHash> ids;
  Perm id_perm(nr);
  for (size_t i = 0; i < nr; ++i) id_perm[i] = static_cast<std::uint16_t>(i);
  perms.push_back(id_perm);
  ids.emplace(id_perm, 0);

  for (size_t head = 0; head < perms.size(); ++head) {
    for (int s = 0; s < r; ++s) {
      Perm q(nr);
      const Perm& w = perms[head];
      const Perm& g = gen_perm_[s];
      for (size_t i = 0; i < nr; ++i) q[i] = w[g[i]];  // w*s acting as roots -> w(s(root))
      if (!ids.contains(q)) {
        if (perms.size() >= cap_)
          throw size_error("group order exceeds cap (" + std::to_string(cap_) + ")");
        ids.emplace(q, static_cast<Elt>(perms.size()));
        perms.push_back(std::move(q));
      }
    }
  }
  n_ = static_cast<Elt>(perms.size());
  if (datum_.expected_order != 0 && n_ != datum_.expected_order)
    throw structural_error("enumerated order disagrees with the known order for " + datum_.label);

  auto length_of = [&](const Perm& p) {
    int l = 0;
    for (int i = 0; i < n_pos_; ++i)
      if (p[i] >= static_cast<std::uint16_t>(n_pos_)) ++l;
    return l;
  };

  std::vector<int> len(n_);
  for (Elt w = 0; w < n_; ++w) len[w] = length_of(perms[w]);

  // Provisional Cayley tables to extract ShortLex words via left descents.
  std::vector<std::vector<Elt>> lmul(r, std::vector<Elt>(n_)), rmul(r, std::vector<Elt>(n_));
  for (Elt w = 0; w < n_; ++w) {
    for (int s = 0; s < r; ++s) {
      const Perm& pw = perms[w];
      const Perm& g = gen_perm_[s];
      Perm q(nr), q2(nr);
      for (size_t i = 0; i < nr; ++i) {
        q[i] = pw[g[i]];   // w*s
        q2[i] = g[pw[i]];  // s*w
      }
      rmul[s][w] = ids.at(q);
      lmul[s][w] = ids.at(q2);
    }
  }

  std::vector<std::vector<std::uint8_t>> word(n_);
  for (Elt w = 0; w < n_; ++w) {
    Elt x = w;
    while (len[x] > 0) {
      int s = 0;
      while (len[lmul[s][x]] >= len[x]) ++s;  // smallest left descent
      word[w].push_back(static_cast<std::uint8_t>(s));
      x = lmul[s][x];
    }
  }

  // Final ids: sort by (length, ShortLex word).
  std::vector<Elt> order(n_);
  for (Elt w = 0; w < n_; ++w) order[w] = w;
  std::sort(order.begin(), order.end(), [&](Elt a, Elt b) {
    if (len[a] != len[b]) return len[a] < len[b];
    return word[a] < word[b];
  });
  std::vector<Elt> newid(n_);
  for (Elt i = 0; i < n_; ++i) newid[order[i]] = i;

  lengths_.resize(n_);
  words_.resize(n_);
  inv_.resize(n_);
  rdesc_.assign(n_, 0);
  ldesc_.assign(n_, 0);
  left_cayley_.assign(r, std::vector<Elt>(n_));
  right_cayley_.assign(r, std::vector<Elt>(n_));
  simple_image_.assign(n_, std::vector<std::uint16_t>(r));

  for (Elt old = 0; old < n_; ++old) {
    Elt w = newid[old];
    lengths_[w] = len[old];
    words_[w] = word[old];
    for (int s = 0; s < r; ++s) {
      left_cayley_[s][w] = newid[lmul[s][old]];
      right_cayley_[s][w] = newid[rmul[s][old]];
      simple_image_[w][s] = perms[old][simple_root_[s]];
      if (perms[old][simple_root_[s]] >= static_cast<std::uint16_t>(n_pos_))
        rdesc_[w] |= 1u << s;
    }
    Perm ip(nr);
    for (size_t i = 0; i < nr; ++i) ip[perms[old][i]] = static_cast<std::uint16_t>(i);
    inv_[w] = ids.at(ip);  // patched to final ids below
  }
  for (Elt w = 0; w < n_; ++w) inv_[w] = newid[inv_[w]];
  for (Elt w = 0; w < n_; ++w) ldesc_[w] = rdesc_[inv_[w]];

  w0_ = n_ - 1;
  if (lengths_[w0_] != n_pos_)
    throw structural_error("longest element length differs from the positive root count");
  for (Elt w = 0; w < n_; ++w) {
    if (lengths_[mul(w0_, w)] != n_pos_ - lengths_[w])
      throw structural_error("l(w0 w) != l(w0) - l(w)");
    if (lengths_[inv_[w]] != lengths_[w])
      throw structural_error("inversion does not preserve length");
  }
}

Elt CoxeterGroup::mul(Elt x, Elt y) const {
  Elt z = x;
  for (std::uint8_t s : words_[y]) z = right_cayley_[s][z];
  return z;
}

void CoxeterGroup::fill_bruhat() {
  bruhat_.assign(static_cast<size_t>(n_) * n_, 0);
  auto at = [&](Elt y, Elt w) -> std::uint8_t& {
    return bruhat_[static_cast<size_t>(y) * n_ + w];
  };
  at(0, 0) = 1;
  for (Elt w = 1; w < n_; ++w) {
    int s = words_[w][0];
    Elt u = left_cayley_[s][w];  // sw < w
    for (Elt y = 0; y < n_; ++y) {
      Elt sy = left_cayley_[s][y];
      at(y, w) = lengths_[sy] < lengths_[y] ? at(sy, u) : at(y, u);
    }
  }
}

double CoxeterGroup::reflection_trace(Elt w) const {
  double t = 0;
  for (int s = 0; s < rank(); ++s) t += roots_[simple_image_[w][s]][s];
  return t;
}

ConjClasses CoxeterGroup::conjugacy_classes() const {
  ConjClasses cc;
  cc.class_of.assign(n_, -1);
  for (Elt x = 0; x < n_; ++x) {
    if (cc.class_of[x] >= 0) continue;
    int id = static_cast<int>(cc.classes.size());
    std::vector<Elt> members, stack{x};
    cc.class_of[x] = id;
    while (!stack.empty()) {
      Elt y = stack.back();
      stack.pop_back();
      members.push_back(y);
      for (int s = 0; s < rank(); ++s) {
        Elt z = left_cayley_[s][right_cayley_[s][y]];  // s y s
        if (cc.class_of[z] < 0) {
          cc.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cc.reps.push_back(members.front());
    cc.classes.push_back(std::move(members));
  }
  return cc;
}

std::string CoxeterGroup::dump_json() const {
  nlohmann::ordered_json doc;
  doc["type"] = datum_.label;
  doc["rank"] = rank();
  doc["order"] = n_;
  doc["positive_roots"] = n_pos_;
  auto elems = nlohmann::ordered_json::array();
  for (Elt w = 0; w < n_; ++w) {
    nlohmann::ordered_json e;
    e["id"] = w;
    e["length"] = lengths_[w];
    e["word"] = words_[w];
    e["inverse"] = inv_[w];
    std::vector<int> ld, rd;
    for (int s = 0; s < rank(); ++s) {
      if (is_left_descent(w, s)) ld.push_back(s);
      if (is_right_descent(w, s)) rd.push_back(s);
    }
    e["left_descents"] = ld;
    e["right_descents"] = rd;
    elems.push_back(std::move(e));
  }
  doc["elements"] = std::move(elems);
  return doc.dump(2);
}

}  // namespace jring
