#include "graphlie/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "graphlie/errors.hpp"

namespace graphlie {

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<Permutation> closure_elements(const std::vector<Permutation>& generators,
                                          int degree, std::size_t bound) {
  std::set<std::vector<int>> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id.images());
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : generators) {
      Permutation next = cur.compose(g);
      if (seen.insert(next.images()).second) {
        if (seen.size() > bound) {
          throw InputError("closure exceeds bound of " + std::to_string(bound) + " elements");
        }
        todo.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements;
  elements.reserve(seen.size());
  for (const auto& images : seen) elements.emplace_back(images);
  return elements;  // std::set iterates lexicographically, already canonical
}

/// Greedy generating subset: walk the sorted elements and keep those not yet
/// spanned. The final span must reproduce the element set exactly, which
/// doubles as the group-axiom validation for from_elements.
std::vector<Permutation> reduce_generators(const std::vector<Permutation>& sorted_elements,
                                           int degree) {
  std::vector<Permutation> gens;
  std::set<std::vector<int>> span;
  span.insert(Permutation::identity(degree).images());
  for (const auto& e : sorted_elements) {
    if (span.count(e.images())) continue;
    gens.push_back(e);
    auto closed = closure_elements(gens, degree, kClosureBound);
    span.clear();
    for (const auto& p : closed) span.insert(p.images());
  }
  if (span.size() != sorted_elements.size()) {
    throw CheckError("element set is not closed: closure has " + std::to_string(span.size()) +
                     " elements, input has " + std::to_string(sorted_elements.size()));
  }
  return gens;
}

}  // namespace

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

PermutationGroup PermutationGroup::closure(const std::vector<Permutation>& generators,
                                           int degree, std::size_t bound) {
  if (degree <= 0) throw InputError("group degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch");
  }
  auto elements = closure_elements(generators, degree, bound);
  auto gens = reduce_generators(elements, degree);
  return PermutationGroup(degree, std::move(elements), std::move(gens));
}

PermutationGroup PermutationGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw InputError("a group needs at least the identity");
  const int degree = elements.front().degree();
  for (const auto& e : elements) {
    if (e.degree() != degree) throw InputError("element degree mismatch");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.front().is_identity()) {
    throw CheckError("element set does not contain the identity");
  }
  auto gens = reduce_generators(elements, degree);
  return PermutationGroup(degree, std::move(elements), std::move(gens));
}

bool PermutationGroup::contains(const Permutation& p) const { return index_of(p) >= 0; }

int PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<int> PermutationGroup::orbit(int point) const {
  if (point < 0 || point >= degree_) throw InputError("orbit point out of range");
  std::set<int> hit;
  for (const auto& g : elements_) hit.insert(g(point));
  return std::vector<int>(hit.begin(), hit.end());
}

PermutationGroup PermutationGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw InputError("stabilizer point out of range");
  std::vector<Permutation> fixed;
  for (const auto& g : elements_) {
    if (g(point) == point) fixed.push_back(g);
  }
  auto stab = from_elements(std::move(fixed));
  if (orbit(point).size() * stab.order() != order()) {
    throw CheckError("orbit-stabilizer product mismatch");  // unreachable for true groups
  }
  return stab;
}

PermutationGroup build_cyclic(int n) {
  if (n < 1) throw InputError("cyclic group needs n >= 1");
  std::vector<Permutation> elements;
  for (int k = 0; k < n; ++k) elements.push_back(translation_map(n, k));
  return PermutationGroup::from_elements(std::move(elements));
}

PermutationGroup build_dihedral(int n) {
  if (n < 3) throw InputError("dihedral group needs n >= 3");
  auto group = PermutationGroup::closure({translation_map(n, 1), affine_map(n, n - 1, 0)}, n);
  if (group.order() != 2 * static_cast<std::size_t>(n)) {
    throw CheckError("dihedral closure has unexpected order");
  }
  return group;
}

PermutationGroup build_holomorph(int n) {
  if (n < 2) throw InputError("holomorph needs n >= 2");
  std::vector<Permutation> elements;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (int a = 0; a < n; ++a) elements.push_back(affine_map(n, u, a));
  }
  auto group = PermutationGroup::from_elements(std::move(elements));
  if (group.order() != static_cast<std::size_t>(n) * euler_phi(n)) {
    throw CheckError("holomorph has unexpected order");
  }
  return group;
}

namespace {

std::vector<long long> element_orders(const PermutationGroup& g) {
  std::vector<long long> orders;
  orders.reserve(g.order());
  for (const auto& e : g.elements()) orders.push_back(e.order());
  return orders;
}

/// Replays the Cayley graph of `a` under a candidate assignment of images
/// for a's generators, enforcing f(x * g_k) = f(x) * img_k on every element.
/// Returns the element-index mapping on success.
std::optional<std::vector<int>> replay_images(const PermutationGroup& a,
                                              const PermutationGroup& b,
                                              const std::vector<int>& gen_images) {
  const auto& gens = a.generators();
  std::vector<int> image(a.order(), -1);
  const int id_a = a.index_of(Permutation::identity(a.degree()));
  const int id_b = b.index_of(Permutation::identity(b.degree()));
  image[id_a] = id_b;
  std::deque<int> todo{id_a};
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = a.index_of(a.elements()[x].compose(gens[k]));
      int fy = b.index_of(b.elements()[image[x]].compose(b.elements()[gen_images[k]]));
      if (image[y] == -1) {
        image[y] = fy;
        todo.push_back(y);
      } else if (image[y] != fy) {
        return std::nullopt;
      }
    }
  }
  std::vector<char> used(b.order(), 0);
  for (int img : image) {
    if (img < 0 || used[img]) return std::nullopt;
    used[img] = 1;
  }
  return image;
}

bool verify_homomorphism(const PermutationGroup& a, const PermutationGroup& b,
                         const std::vector<int>& image) {
  auto check_pair = [&](std::size_t i, std::size_t j) {
    int lhs = image[a.index_of(a.elements()[i].compose(a.elements()[j]))];
    int rhs = b.index_of(b.elements()[image[i]].compose(b.elements()[image[j]]));
    return lhs == rhs;
  };
  const std::size_t n = a.order();
  if (n <= 200) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!check_pair(i, j)) return false;
      }
    }
    return true;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    if (!check_pair(pick(rng), pick(rng))) return false;
  }
  return true;
}

}  // namespace

std::optional<GroupIsomorphism> is_isomorphic(const PermutationGroup& a,
                                              const PermutationGroup& b, std::size_t bound) {
  if (a.order() > bound || b.order() > bound) {
    throw InputError("isomorphism search bound exceeded");
  }
  if (a.order() != b.order()) return std::nullopt;

  auto orders_a = element_orders(a);
  auto orders_b = element_orders(b);
  auto profile_a = orders_a;
  auto profile_b = orders_b;
  std::sort(profile_a.begin(), profile_a.end());
  std::sort(profile_b.begin(), profile_b.end());
  if (profile_a != profile_b) return std::nullopt;

  const auto& gens = a.generators();
  if (gens.empty()) return GroupIsomorphism{{b.index_of(Permutation::identity(b.degree()))}};

  // Candidate images per generator, filtered by element order.
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    long long want = gens[k].order();
    for (std::size_t j = 0; j < b.order(); ++j) {
      if (orders_b[j] == want) candidates[k].push_back(static_cast<int>(j));
    }
    if (candidates[k].empty()) return std::nullopt;
  }

  std::vector<int> choice(gens.size(), -1);
  std::optional<GroupIsomorphism> found;
  auto backtrack = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto image = replay_images(a, b, choice);
      if (image && verify_homomorphism(a, b, *image)) {
        found = GroupIsomorphism{std::move(*image)};
        return true;
      }
      return false;
    }
    for (int cand : candidates[k]) {
      choice[k] = cand;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  backtrack(backtrack, 0);
  return found;
}

std::string kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Dihedral: return "dihedral";
    case GroupKind::Holomorph: return "holomorph";
    case GroupKind::Other: return "other";
  }
  return "other";
}

namespace {

std::optional<GroupIdentification> recognize_cyclic(const PermutationGroup& g) {
  const auto n = static_cast<long long>(g.order());
  for (const auto& e : g.elements()) {
    if (e.order() == n) {
      auto iso = is_isomorphic(g, build_cyclic(static_cast<int>(n)));
      if (!iso) break;  // cannot happen; fall through defensively
      return GroupIdentification{GroupKind::Cyclic, static_cast<int>(n), true, std::move(iso)};
    }
  }
  return std::nullopt;
}

std::optional<GroupIdentification> recognize_dihedral(const PermutationGroup& g) {
  if (g.order() % 2 != 0) return std::nullopt;
  const auto m = static_cast<long long>(g.order() / 2);
  if (m < 3) return std::nullopt;
  for (const auto& r : g.elements()) {
    if (r.order() != m) continue;
    for (const auto& s : g.elements()) {
      if (s.order() != 2) continue;
      if (!(s.compose(r).compose(s) == r.inverse())) continue;
      if (PermutationGroup::closure({r, s}, g.degree()).order() != g.order()) continue;
      auto iso = is_isomorphic(g, build_dihedral(static_cast<int>(m)));
      if (!iso) continue;
      return GroupIdentification{GroupKind::Dihedral, static_cast<int>(m), true, std::move(iso)};
    }
  }
  return std::nullopt;
}

std::optional<GroupIdentification> recognize_holomorph(const PermutationGroup& g) {
  std::vector<int> params;
  if (g.degree() >= 2 &&
      g.order() == static_cast<std::size_t>(g.degree()) * euler_phi(g.degree())) {
    params.push_back(g.degree());  // the natural case first
  }
  for (int m = 2; m <= static_cast<int>(g.order()); ++m) {
    if (m == g.degree()) continue;
    if (static_cast<std::size_t>(m) * euler_phi(m) == g.order()) params.push_back(m);
  }
  for (int m : params) {
    auto iso = is_isomorphic(g, build_holomorph(m));
    if (iso) {
      return GroupIdentification{GroupKind::Holomorph, m, true, std::move(iso)};
    }
  }
  return std::nullopt;
}

}  // namespace

GroupIdentification identify(const PermutationGroup& g, std::optional<GroupKind> prefer) {
  std::vector<GroupKind> order{GroupKind::Cyclic, GroupKind::Dihedral, GroupKind::Holomorph};
  if (prefer && *prefer != GroupKind::Other) {
    order.erase(std::find(order.begin(), order.end(), *prefer));
    order.insert(order.begin(), *prefer);
  }
  for (GroupKind kind : order) {
    std::optional<GroupIdentification> hit;
    switch (kind) {
      case GroupKind::Cyclic: hit = recognize_cyclic(g); break;
      case GroupKind::Dihedral: hit = recognize_dihedral(g); break;
      case GroupKind::Holomorph: hit = recognize_holomorph(g); break;
      case GroupKind::Other: break;
    }
    if (hit) return *hit;
  }
  return GroupIdentification{};
}

}  // namespace graphlie
