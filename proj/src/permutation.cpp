#include "graphlie/permutation.hpp"

#include <numeric>
#include <string>

namespace graphlie {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw InputError("permutation must have positive degree");
  std::vector<char> hit(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n) {
      throw InputError("permutation image " + std::to_string(x) + " out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (hit[x]) throw InputError("permutation has repeated image " + std::to_string(x));
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (degree() != inner.degree()) {
    throw InputError("cannot compose permutations of different degrees");
  }
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    images[x] = images_[inner.images_[x]];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    images[images_[x]] = static_cast<int>(x);
  }
  return Permutation(std::move(images));
}

long long Permutation::order() const {
  long long result = 1;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    long long len = 0;
    std::size_t x = start;
    while (!done[x]) {
      done[x] = 1;
      x = static_cast<std::size_t>(images_[x]);
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation affine_map(int n, int unit, int shift) {
  if (n <= 0) throw InputError("affine_map needs positive modulus");
  std::vector<int> images(n);
  for (int x = 0; x < n; ++x) {
    int y = (unit % n * x + shift % n) % n;
    images[x] = y < 0 ? y + n : y;
  }
  return Permutation(std::move(images));  // non-unit multipliers fail bijectivity here
}

Permutation translation_map(int n, int shift) { return affine_map(n, 1, shift); }

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) {
      done[start] = 1;
      continue;
    }
    out += '(';
    int x = start;
    bool first = true;
    while (!done[x]) {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[x] = 1;
      x = p(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace graphlie
