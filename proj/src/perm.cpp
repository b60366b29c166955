#include "hurwitz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  if (d == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(d, 0);
  for (int v : images_) {
    if (v < 0 || v >= d || seen[v])
      throw std::invalid_argument("image table is not a bijection of {0,...,d-1}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  const int d = p.degree();
  std::vector<int> im(d);
  for (int x = 0; x < d; ++x) im[x] = p(q(x));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  const int d = p.degree();
  std::vector<int> im(d);
  for (int x = 0; x < d; ++x) im[p(x)] = x;
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  const int d = p.degree();
  std::vector<int> im(d);
  for (int x = 0; x < d; ++x) im[g(x)] = g(p(x));  // (g p g^-1)(g(x)) = g(p(x))
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  const int d = p.degree();
  std::vector<char> seen(d, 0);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < d; ++s) {
    if (seen[s]) continue;
    // s is the smallest unseen point, hence the minimum of its cycle
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = p(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycles_of(p)) lengths.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lengths));
}

Permutation canonical_class_rep(const Partition& type) {
  std::vector<int> im(type.total());
  int off = 0;
  for (int len : type.parts()) {
    for (int j = 0; j < len; ++j) im[off + j] = off + (j + 1) % len;
    off += len;
  }
  return Permutation(std::move(im));
}

Permutation conjugator_to_canonical(const Permutation& p) {
  auto cycles = cycles_of(p);  // each starts at its minimum, listed by increasing minimum
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  const int d = p.degree();
  std::vector<int> im(d);
  int off = 0;
  for (const auto& cyc : cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) im[cyc[j]] = off + static_cast<int>(j);
    off += static_cast<int>(cyc.size());
  }
  return Permutation(std::move(im));
}

CentralizerRange::CentralizerRange(const Permutation& p) : degree_(p.degree()) {
  const Partition type = cycle_type(p);
  if (!(p == canonical_class_rep(type)))
    throw std::invalid_argument("centralizer requires the canonical class representative");
  int off = 0;
  for (int len : type.parts()) {
    offset_.push_back(off);
    length_.push_back(len);
    off += len;
  }
  for (std::size_t i = 0; i < length_.size(); ++i) {
    if (i == 0 || length_[i] != length_[i - 1]) length_class_.emplace_back();
    length_class_.back().push_back(static_cast<int>(i));
  }
}

std::uint64_t CentralizerRange::size() const {
  std::uint64_t n = 1;
  for (const auto& cls : length_class_) {
    const std::uint64_t len = static_cast<std::uint64_t>(length_[cls[0]]);
    for (std::size_t k = 0; k < cls.size(); ++k) n *= len * (k + 1);
  }
  return n;
}

CentralizerRange::iterator::iterator(const CentralizerRange* owner)
    : owner_(owner),
      rotation_(owner->length_.size(), 0),
      arrangement_(owner->length_class_),
      done_(false),
      current_(Permutation::identity(owner->degree_)) {
  rebuild();
}

void CentralizerRange::iterator::rebuild() {
  const auto& o = *owner_;
  std::vector<int> im(o.degree_);
  for (std::size_t c = 0; c < o.length_class_.size(); ++c) {
    const auto& cls = o.length_class_[c];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      const int src = cls[k];
      const int dst = arrangement_[c][k];
      const int len = o.length_[src];
      // within-cycle rotation composed with a permutation of equal-length blocks
      for (int j = 0; j < len; ++j)
        im[o.offset_[src] + j] = o.offset_[dst] + (j + rotation_[src]) % len;
    }
  }
  current_ = Permutation(std::move(im));
}

CentralizerRange::iterator& CentralizerRange::iterator::operator++() {
  const auto& o = *owner_;
  // mixed-radix increment: rotations first, then block arrangements per class
  for (std::size_t i = 0; i < rotation_.size(); ++i) {
    if (++rotation_[i] < o.length_[i]) {
      rebuild();
      return *this;
    }
    rotation_[i] = 0;
  }
  for (auto& arr : arrangement_) {
    if (std::next_permutation(arr.begin(), arr.end())) {
      rebuild();
      return *this;
    }
  }
  done_ = true;
  return *this;
}

CentralizerRange centralizer(const Permutation& canonical_rep) {
  return CentralizerRange(canonical_rep);
}

std::vector<Permutation> centralizer_elements(const Permutation& canonical_rep) {
  std::vector<Permutation> out;
  for (const Permutation& z : centralizer(canonical_rep)) out.push_back(z);
  return out;
}

std::uint64_t centralizer_order(const Partition& type) {
  std::uint64_t n = 1;
  const auto& parts = type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::uint64_t len = static_cast<std::uint64_t>(parts[i]);
    for (std::size_t k = 0; k < j - i; ++k) n *= len * (k + 1);
    i = j;
  }
  return n;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& cyc : cycles_of(p)) {
    if (cyc.size() < 2) continue;  // fixed points omitted
    any = true;
    os << '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) os << ' ';
      os << cyc[j] + 1;  // 1-indexed at the text boundary
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation parse_cycle_string(const std::string& text, int degree) {
  if (degree < 1) throw ParseError("cycle string: degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("cycle string: empty input");
  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("cycle string: expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("cycle string: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("cycle string: expected a point or ')'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw ParseError("cycle string: point out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("cycle string: point out of range");
      if (used[v - 1]) throw ParseError("cycle string: repeated point");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    saw_cycle = true;
    for (std::size_t j = 0; j < cyc.size(); ++j) im[cyc[j]] = cyc[(j + 1) % cyc.size()];
  }
  if (!saw_cycle) throw ParseError("cycle string: no cycles found");
  return Permutation(std::move(im));
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  return os.str();
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  for (;;) {
    skip_ws();
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("partition: expected a positive integer part");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("partition: part out of range");
      ++i;
    }
    if (v < 1) throw ParseError("partition: parts must be positive");
    parts.push_back(static_cast<int>(v));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("partition: expected ','");
    ++i;
  }
  return Partition(std::move(parts));
}

}  // namespace hurwitz
