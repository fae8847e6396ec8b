#include "coxan/words.hpp"

#include <algorithm>
#include <cassert>

namespace coxan {

namespace {

// Fused exact kernels for the hot matrix paths. Entries of group matrices
// and root vectors are algebraic integers (denominator 1), so sums of
// products can be accumulated as one long convolution in 128-bit scratch and
// reduced mod Phi_N once per output entry. Falls back to generic Cyclo
// arithmetic whenever a denominator other than 1 shows up.
constexpr int kMaxFusedDegree = 64;

struct FusedScratch {
  __int128 acc[2 * kMaxFusedDegree - 1];
};

bool integral(const Cyclo& c) { return c.den() == 1; }

void conv_acc(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
              __int128* acc) {
  const int d = static_cast<int>(a.size());
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    const __int128 ai = a[i];
    for (int j = 0; j < d; ++j)
      if (b[j] != 0) acc[i + j] += ai * b[j];
  }
}

void sub_acc(const std::vector<std::int64_t>& a, __int128* acc) {
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] -= a[i];
}

void add_acc(const std::vector<std::int64_t>& a, __int128* acc) {
  for (std::size_t i = 0; i < a.size(); ++i) acc[i] += a[i];
}

Cyclo reduce_scratch(const CycloField& f, __int128* acc) {
  const int d = f.degree();
  const auto& phi = f.modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    __int128 top = acc[i];
    if (top == 0) continue;
    acc[i] = 0;
    for (int j = 0; j < d; ++j) acc[i - d + j] -= top * phi[j];
  }
  std::vector<std::int64_t> out(d);
  for (int i = 0; i < d; ++i) {
    if (acc[i] > INT64_MAX || acc[i] < INT64_MIN)
      throw OverflowError("exact coefficient left the 64-bit range");
    out[i] = static_cast<std::int64_t>(acc[i]);
  }
  return Cyclo::from_parts(f, std::move(out), 1);
}

}  // namespace

CycloMatrix CycloMatrix::identity(const CycloField& f, int n) {
  CycloMatrix m;
  m.n = n;
  m.a.assign(static_cast<std::size_t>(n) * n, Cyclo::zero(f));
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo::one(f);
  return m;
}

namespace {

bool all_integral(const CycloMatrix& m) {
  for (const Cyclo& c : m.a)
    if (c.den() != 1) return false;
  return true;
}

}  // namespace

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  assert(n == o.n);
  CycloMatrix r;
  r.n = n;
  r.a.reserve(a.size());
  if (n > 0 && a[0].field()->degree() <= kMaxFusedDegree && all_integral(*this) &&
      all_integral(o)) {
    const CycloField& f = *a[0].field();
    const int d = f.degree();
    FusedScratch scratch;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::fill(scratch.acc, scratch.acc + 2 * d - 1, 0);
        for (int k = 0; k < n; ++k)
          conv_acc(at(i, k).coeffs(), o.at(k, j).coeffs(), scratch.acc);
        r.a.push_back(reduce_scratch(f, scratch.acc));
      }
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyclo s = at(i, 0) * o.at(0, j);
      for (int k = 1; k < n; ++k) s += at(i, k) * o.at(k, j);
      r.a.push_back(std::move(s));
    }
  return r;
}

bool CycloMatrix::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool CycloMatrix::is_minus_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j ? !(-at(i, j)).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::string CycloMatrix::serialize() const {
  std::string out;
  for (const Cyclo& c : a) c.serialize(out);
  return out;
}

GeometricRep::GeometricRep(const CoxeterGraph& g) : graph_(g) {
  std::vector<long> labels;
  for (const auto& [uv, m] : g.edges()) labels.push_back(m);
  field_ = std::make_unique<CycloField>(CycloField::conductor_for_labels(labels));

  const int n = g.size();
  t_.reserve(static_cast<std::size_t>(n) * n);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      if (v == u) {
        t_.push_back(Cyclo::integer(*field_, -2));
      } else if (int m = g.label(v, u); m != 0) {
        t_.push_back(Cyclo::two_cos_pi_over(*field_, m));
      } else {
        t_.push_back(Cyclo::integer(*field_, 2));  // -2 B with B = -1
      }
    }

  for (int v = 0; v < n; ++v) {
    CycloMatrix m = CycloMatrix::identity(*field_, n);
    for (int u = 0; u < n; ++u)
      m.at(v, u) = (u == v) ? Cyclo::integer(*field_, -1) : action_coeff(v, u);
    gens_.push_back(std::move(m));
  }
}

GeometricRep geometric_rep(const CoxeterGraph& g) { return GeometricRep(g); }

CycloMatrix GeometricRep::element_matrix(const std::vector<int>& word) const {
  CycloMatrix m = CycloMatrix::identity(*field_, rank());
  // Right-to-left so each step is a sparse generator update.
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = mul_generator_left(*it, m);
  return m;
}

CycloMatrix GeometricRep::mul_generator_left(int v, const CycloMatrix& m) const {
  CycloMatrix r = m;
  if (field_->degree() <= kMaxFusedDegree && all_integral(m)) {
    const int d = field_->degree();
    FusedScratch scratch;
    for (int c = 0; c < m.n; ++c) {
      std::fill(scratch.acc, scratch.acc + 2 * d - 1, 0);
      sub_acc(m.at(v, c).coeffs(), scratch.acc);
      for (int j = 0; j < m.n; ++j)
        if (j != v) conv_acc(action_coeff(v, j).coeffs(), m.at(j, c).coeffs(), scratch.acc);
      r.at(v, c) = reduce_scratch(*field_, scratch.acc);
    }
    return r;
  }
  for (int c = 0; c < m.n; ++c) {
    Cyclo s = -m.at(v, c);
    for (int j = 0; j < m.n; ++j)
      if (j != v && !m.at(j, c).is_zero()) s += action_coeff(v, j) * m.at(j, c);
    r.at(v, c) = std::move(s);
  }
  return r;
}

CycloMatrix GeometricRep::mul_generator_right(const CycloMatrix& m, int v) const {
  // Column v of the generator is -e_v; column c != v is e_c + t(v,c) e_v.
  CycloMatrix r = m;
  for (int row = 0; row < m.n; ++row) {
    const Cyclo& pivot = m.at(row, v);
    r.at(row, v) = -pivot;
    if (pivot.is_zero()) continue;
    for (int c = 0; c < m.n; ++c)
      if (c != v) r.at(row, c) = m.at(row, c) + pivot * action_coeff(v, c);
  }
  return r;
}

std::vector<Cyclo> GeometricRep::apply_to_simple_root(const CycloMatrix& m, int v) const {
  std::vector<Cyclo> out;
  out.reserve(m.n);
  for (int i = 0; i < m.n; ++i) out.push_back(m.at(i, v));
  return out;
}

void GeometricRep::apply_generator_to_root(int v, std::vector<Cyclo>& coords) const {
  Cyclo s = -coords[v];
  for (int j = 0; j < rank(); ++j)
    if (j != v && !coords[j].is_zero()) s += action_coeff(v, j) * coords[j];
  coords[v] = std::move(s);
}

GroupElement element_of(const GeometricRep& rep, const std::vector<int>& word) {
  for (int s : word)
    if (s < 0 || s >= rep.rank()) throw std::invalid_argument("invalid generator index");
  return GroupElement{rep.element_matrix(word), word};
}

bool equal(const GroupElement& a, const GroupElement& b) { return a.matrix == b.matrix; }

namespace {

// Sign pattern of a coordinate vector: +1 all weakly positive with some
// strictly positive, -1 the mirror image, 0 otherwise (never for roots).
int root_sign(const std::vector<Cyclo>& coords) {
  int seen = 0;
  for (const Cyclo& c : coords) {
    int s = c.sign();
    if (s == 0) continue;
    if (seen == 0) seen = s;
    else if (seen != s) return 0;
  }
  return seen;
}

}  // namespace

std::string Root::serialize() const {
  std::string out;
  for (const Cyclo& c : coords) c.serialize(out);
  return out;
}

bool is_reduced(const GeometricRep& rep, const std::vector<int>& word) {
  const int n = rep.rank();
  // Track prefix * alpha_{s_j} by keeping the prefix matrix columns; cheaper:
  // keep the prefix matrix itself, which we extend by right multiplication.
  CycloMatrix prefix = CycloMatrix::identity(rep.field(), n);
  for (std::size_t j = 0; j < word.size(); ++j) {
    int s = word[j];
    if (s < 0 || s >= n) throw std::invalid_argument("invalid generator index");
    std::vector<Cyclo> image = rep.apply_to_simple_root(prefix, s);
    int sign = root_sign(image);
    assert(sign != 0 && "image of a simple root must be signed");
    if (sign < 0) return false;
    prefix = rep.mul_generator_right(prefix, s);
  }
  return true;
}

std::uint32_t EnumeratedGroup::apply_left_word(const std::vector<int>& word,
                                               std::uint32_t x) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left(*it, x);
  return x;
}

std::uint32_t EnumeratedGroup::index_of_word(const std::vector<int>& word) const {
  return apply_left_word(word, 0);
}

std::uint32_t EnumeratedGroup::conjugate_generator(std::uint32_t a, int s) const {
  std::uint32_t x = left(s, inverse[a]);
  return apply_left_word(elements[a].witness_word, x);
}

namespace {

struct BfsLimits {
  std::size_t max_elements;
  int max_length;  // -1 = unbounded
};

// Shared breadth-first closure. Candidates within one level are produced
// under the execution policy into per-slot storage, then merged serially in
// slot order, so discovery order is independent of scheduling.
EnumeratedGroup bfs_closure(const GeometricRep& rep, const BfsLimits& lim, Exec exec) {
  const int n = rep.rank();
  EnumeratedGroup g;
  g.left_mult.assign(n, {});

  CycloMatrix id = CycloMatrix::identity(rep.field(), n);
  g.index_of.emplace(id.serialize(), 0);
  g.elements.push_back(GroupElement{std::move(id), {}});

  std::vector<std::uint32_t> frontier{0};
  int length = 0;
  bool open_work = false;
  while (!frontier.empty()) {
    if (lim.max_length >= 0 && length >= lim.max_length) {
      open_work = true;  // unexpanded frontier left by the radius limit
      break;
    }
    const std::size_t tasks = frontier.size() * static_cast<std::size_t>(n);
    std::vector<CycloMatrix> cand(tasks);
    std::vector<std::string> key(tasks);
    for_each_index(tasks, exec, [&](std::size_t t) {
      std::uint32_t idx = frontier[t / n];
      int s = static_cast<int>(t % n);
      cand[t] = rep.mul_generator_left(s, g.elements[idx].matrix);
      key[t] = cand[t].serialize();
    });

    std::vector<std::uint32_t> next;
    for (std::size_t t = 0; t < tasks; ++t) {
      std::uint32_t idx = frontier[t / n];
      int s = static_cast<int>(t % n);
      auto [it, inserted] = g.index_of.try_emplace(
          std::move(key[t]), static_cast<std::uint32_t>(g.elements.size()));
      for (std::size_t slot = g.left_mult[s].size();
           slot <= idx; ++slot)
        g.left_mult[s].push_back(UINT32_MAX);
      g.left_mult[s][idx] = it->second;
      if (inserted) {
        if (g.elements.size() >= lim.max_elements) {
          throw CapExceeded("enumeration exceeded cap of " +
                            std::to_string(lim.max_elements) + " elements");
        }
        std::vector<int> word;
        word.reserve(g.elements[idx].witness_word.size() + 1);
        word.push_back(s);
        word.insert(word.end(), g.elements[idx].witness_word.begin(),
                    g.elements[idx].witness_word.end());
        next.push_back(it->second);
        g.elements.push_back(GroupElement{std::move(cand[t]), std::move(word)});
      }
    }
    frontier = std::move(next);
    ++length;
  }
  g.complete = !open_work;

  // Square off the left-multiplication tables (frontier elements of a
  // radius-limited ball have no recorded products).
  for (int s = 0; s < n; ++s) g.left_mult[s].resize(g.elements.size(), UINT32_MAX);

  // Inverse index via the reversed witness word; for balls the inverse of a
  // geodesic word stays inside the ball, so lookups always succeed.
  g.inverse.resize(g.elements.size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    CycloMatrix m = CycloMatrix::identity(rep.field(), n);
    const auto& w = g.elements[i].witness_word;
    for (auto it = w.begin(); it != w.end(); ++it) m = rep.mul_generator_left(*it, m);
    auto found = g.index_of.find(m.serialize());
    assert(found != g.index_of.end());
    g.inverse[i] = found->second;
  }
  return g;
}

}  // namespace

EnumeratedGroup enumerate_group(const GeometricRep& rep, std::size_t cap, Exec exec) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  return bfs_closure(rep, BfsLimits{cap, -1}, exec);
}

EnumeratedGroup enumerate_group_reference(const GeometricRep& rep, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  const int n = rep.rank();
  EnumeratedGroup g;
  g.left_mult.assign(n, {});
  CycloMatrix id = CycloMatrix::identity(rep.field(), n);
  g.index_of.emplace(id.serialize(), 0);
  g.elements.push_back(GroupElement{std::move(id), {}});
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      CycloMatrix m = rep.mul_generator_left(s, g.elements[i].matrix);
      auto [it, inserted] = g.index_of.try_emplace(
          m.serialize(), static_cast<std::uint32_t>(g.elements.size()));
      g.left_mult[s].resize(std::max(g.left_mult[s].size(), i + 1), UINT32_MAX);
      g.left_mult[s][i] = it->second;
      if (inserted) {
        if (g.elements.size() >= cap)
          throw CapExceeded("enumeration exceeded cap of " + std::to_string(cap) +
                            " elements");
        std::vector<int> word{s};
        word.insert(word.end(), g.elements[i].witness_word.begin(),
                    g.elements[i].witness_word.end());
        g.elements.push_back(GroupElement{std::move(m), std::move(word)});
      }
    }
  }
  for (int s = 0; s < n; ++s) g.left_mult[s].resize(g.elements.size(), UINT32_MAX);
  g.inverse.resize(g.elements.size());
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    std::vector<int> rev(g.elements[i].witness_word.rbegin(),
                         g.elements[i].witness_word.rend());
    g.inverse[i] = g.index_of.at(rep.element_matrix(rev).serialize());
  }
  return g;
}

EnumeratedGroup enumerate_ball(const GeometricRep& rep, int radius,
                               std::size_t safety_cap, Exec exec) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  return bfs_closure(rep, BfsLimits{safety_cap, radius}, exec);
}

std::vector<Root> root_system(const GeometricRep& rep) {
  const int n = rep.rank();
  const std::size_t bound = 10 * static_cast<std::size_t>(n) * n;
  std::vector<Root> roots;
  std::unordered_map<std::string, std::uint32_t> seen;

  std::vector<std::uint32_t> frontier;
  for (int v = 0; v < n; ++v) {
    Root r;
    r.coords.assign(n, Cyclo::zero(rep.field()));
    r.coords[v] = Cyclo::one(rep.field());
    r.positive = true;
    auto [it, inserted] = seen.emplace(r.serialize(), roots.size());
    (void)it;
    if (inserted) {
      frontier.push_back(static_cast<std::uint32_t>(roots.size()));
      roots.push_back(std::move(r));
    }
  }
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t idx : frontier) {
      for (int s = 0; s < n; ++s) {
        std::vector<Cyclo> c = roots[idx].coords;
        rep.apply_generator_to_root(s, c);
        std::string k;
        for (const Cyclo& x : c) x.serialize(k);
        if (seen.count(k)) continue;
        int sign = root_sign(c);
        assert(sign != 0 && "roots must be signed");
        if (roots.size() >= bound)
          throw NotFiniteType("root closure exceeded " + std::to_string(bound) +
                              " roots; not finite type");
        seen.emplace(std::move(k), static_cast<std::uint32_t>(roots.size()));
        next.push_back(static_cast<std::uint32_t>(roots.size()));
        roots.push_back(Root{std::move(c), sign > 0});
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

GroupElement longest_element(const GeometricRep& rep) {
  const int n = rep.rank();
  const std::size_t ascent_bound = root_system(rep).size() / 2 + 1;
  CycloMatrix m = CycloMatrix::identity(rep.field(), n);
  std::vector<int> word;
  for (std::size_t step = 0; step <= ascent_bound; ++step) {
    int pick = -1;
    for (int s = 0; s < n; ++s) {
      if (root_sign(rep.apply_to_simple_root(m, s)) > 0) {
        pick = s;
        break;
      }
    }
    if (pick == -1) return GroupElement{std::move(m), std::move(word)};
    m = rep.mul_generator_right(m, pick);
    word.push_back(pick);
  }
  throw NotFiniteType("longest-element ascent did not terminate");
}

bool longest_element_is_minus_identity(const GeometricRep& rep) {
  return longest_element(rep).matrix.is_minus_identity();
}

std::vector<int> reduced_word_of(const GeometricRep& rep, const CycloMatrix& m) {
  const int n = rep.rank();
  CycloMatrix cur = m;
  std::vector<int> rev;
  const std::size_t guard = 1u << 20;
  while (!cur.is_identity()) {
    int pick = -1;
    for (int s = 0; s < n; ++s) {
      // Right descent: w alpha_s is negative exactly when l(ws) < l(w).
      if (root_sign(rep.apply_to_simple_root(cur, s)) < 0) {
        pick = s;
        break;
      }
    }
    if (pick == -1 || rev.size() > guard)
      throw std::logic_error("descent failed: matrix is not a group element");
    cur = rep.mul_generator_right(cur, pick);
    rev.push_back(pick);
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

std::vector<int> retraction_image_unchecked(int v, int w, const std::vector<int>& word) {
  std::vector<int> out;
  for (int s : word) {
    if (s != v && s != w) continue;  // r(x) = 1 off the pair
    if (!out.empty() && out.back() == s) out.pop_back();  // s^2 = 1
    else out.push_back(s);
  }
  return out;
}

std::vector<int> retraction_image(const CoxeterGraph& g, int v, int w,
                                  const std::vector<int>& word) {
  if (v == w || v < 0 || w < 0 || v >= g.size() || w >= g.size())
    throw HypothesisViolated("retraction needs two distinct vertices");
  if (g.adjacent(v, w))
    throw HypothesisViolated("retraction vertices " + g.name(v) + ", " + g.name(w) +
                             " are adjacent");
  auto evens = even_vertices(g);
  auto is_even_v = [&](int x) {
    return std::find(evens.begin(), evens.end(), x) != evens.end();
  };
  if (!is_even_v(v) || !is_even_v(w))
    throw HypothesisViolated("retraction vertices must both be even");
  for (int s : word)
    if (s < 0 || s >= g.size()) throw std::invalid_argument("invalid generator index");
  return retraction_image_unchecked(v, w, word);
}

}  // namespace coxan
