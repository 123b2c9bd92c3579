#include "gwpairs/partitions/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwpairs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty() || text == "0" || text == "()") return {};
  std::string body = text;
  if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition '" + text + "'");
    }
    if (pos != item.size() || v <= 0) throw std::invalid_argument("bad partition '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

Partition Partition::ones(int k) {
  if (k < 0) throw std::invalid_argument("negative number of parts");
  return Partition(std::vector<int>(static_cast<size_t>(k), 1));
}

int Partition::length_plus() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 1; }));
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

Partition Partition::without_ones() const {
  std::vector<int> p;
  for (int x : parts_) {
    if (x > 1) p.push_back(x);
  }
  return Partition(std::move(p));
}

Partition Partition::operator+(const Partition& o) const {
  std::vector<int> p = parts_;
  p.insert(p.end(), o.parts_.begin(), o.parts_.end());
  return Partition(std::move(p));
}

Partition Partition::select(const std::vector<int>& positions) const {
  std::vector<int> p;
  p.reserve(positions.size());
  for (int i : positions) p.push_back(parts_.at(static_cast<size_t>(i)));
  return Partition(std::move(p));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 1; col <= largest(); ++col) {
    c.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; })));
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (size_t i = 0; i < mu.parts_.size(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

mpz_class aut_order(const Partition& p) {
  mpz_class r = 1;
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size();) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

mpz_class z_factor(const Partition& p) {
  mpz_class r = aut_order(p);
  for (int x : p.parts()) r *= x;
  return r;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  if (d < 1) throw std::invalid_argument("partitions_up_to needs d >= 1");
  std::vector<Partition> out;
  for (int n = 1; n <= d; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
  }
  return p[static_cast<size_t>(n)];
}

int ordering_rank(const Partition& p, Ordering o) {
  switch (o) {
    case Ordering::D:
      return p.size() - p.length();
    case Ordering::S:
      return p.length_plus();
    case Ordering::Dstar:
      return p.size() + p.length();
    case Ordering::SIM:
      break;
  }
  throw std::invalid_argument("SIM is an equivalence, not a ranked preorder");
}

Relation compare(const Partition& a, const Partition& b, Ordering o) {
  if (o == Ordering::SIM) {
    return a.without_ones() == b.without_ones() ? Relation::equivalent : Relation::not_equivalent;
  }
  const int ra = ordering_rank(a, o);
  const int rb = ordering_rank(b, o);
  if (ra > rb) return Relation::greater;
  if (ra < rb) return Relation::less;
  return Relation::equal_rank;
}

bool strictly_greater(const Partition& a, const Partition& b, Ordering o) {
  return compare(a, b, o) == Relation::greater;
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::greater:
      return "greater";
    case Relation::equal_rank:
      return "equal-rank";
    case Relation::less:
      return "less";
    case Relation::equivalent:
      return "equivalent";
    case Relation::not_equivalent:
      return "not-equivalent";
  }
  return "?";
}

Ordering parse_ordering(const std::string& name) {
  if (name == "D") return Ordering::D;
  if (name == "S") return Ordering::S;
  if (name == "Dstar") return Ordering::Dstar;
  if (name == "SIM") return Ordering::SIM;
  throw std::invalid_argument("unknown ordering '" + name + "' (expected D, S, Dstar or SIM)");
}

std::vector<Partition> sim_class(const Partition& gamma, int d) {
  if (gamma.multiplicity(1) != 0) throw std::invalid_argument("sim_class needs a partition without parts 1");
  std::vector<Partition> out;
  for (int k = gamma.empty() ? 1 : 0; gamma.size() + k <= d; ++k) out.push_back(gamma + Partition::ones(k));
  return out;
}

Partition eta_plus(const Partition& eta, int N) {
  if (N < 1) throw std::invalid_argument("eta_plus needs N >= 1");
  if (eta.empty()) return Partition{N};
  std::vector<int> p = eta.parts();
  p.front() += N;
  return Partition(std::move(p));
}

Partition eta_minus(const Partition& eta) {
  if (eta.empty()) return {};
  std::vector<int> p(eta.parts().begin() + 1, eta.parts().end());
  return Partition(std::move(p));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    out += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b[i] + 1);
    }
    out += "}";
  }
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("set_partitions needs n >= 0");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<size_t>(n), 0);
  std::vector<int> mx(static_cast<size_t>(n), 0);
  while (true) {
    SetPartition sp;
    sp.blocks.resize(static_cast<size_t>(mx[static_cast<size_t>(n - 1)]) + 1);
    for (int i = 0; i < n; ++i) sp.blocks[static_cast<size_t>(a[static_cast<size_t>(i)])].push_back(i);
    out.push_back(std::move(sp));
    int i = n - 1;
    while (i > 0 && a[static_cast<size_t>(i)] > mx[static_cast<size_t>(i - 1)]) --i;
    if (i == 0) break;
    ++a[static_cast<size_t>(i)];
    mx[static_cast<size_t>(i)] = std::max(mx[static_cast<size_t>(i - 1)], a[static_cast<size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<size_t>(j)] = 0;
      mx[static_cast<size_t>(j)] = mx[static_cast<size_t>(i)];
    }
  }
  return out;
}

mpz_class bell_number(int n) {
  // Bell triangle.
  std::vector<mpz_class> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace gwpairs
