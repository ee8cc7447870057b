#include "fock/multipartition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fock {

EModulus EModulus::finite(int e) {
  if (e < 2) throw std::invalid_argument("modulus must be at least 2");
  return EModulus(e);
}

EModulus EModulus::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad modulus '" + text + "'");
  return finite(v);
}

int EModulus::value() const {
  if (is_infinite()) throw internal_error("finite modulus required");
  return e_;
}

int EModulus::residue(int x) const {
  if (is_infinite()) return x;
  int r = x % e_;
  return r < 0 ? r + e_ : r;
}

std::string EModulus::str() const {
  return is_infinite() ? "inf" : std::to_string(e_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition index is 1-based");
  return i <= height() ? parts_[i - 1] : 0;
}

int Partition::rank() const {
  int n = 0;
  for (int p : parts_) n += p;
  return n;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> out(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("level must be at least 1");
}

Multipartition Multipartition::empty(int level) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  return Multipartition(std::vector<Partition>(level));
}

const Partition& Multipartition::component(int c) const {
  if (c < 0 || c >= level()) throw std::invalid_argument("component index out of range");
  return components_[c];
}

int Multipartition::rank() const {
  int n = 0;
  for (const auto& p : components_) n += p.rank();
  return n;
}

bool Multipartition::empty() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Partition& p) { return p.empty(); });
}

int node_content(const Node& b, const Multicharge& s) {
  if (b.comp < 0 || b.comp >= static_cast<int>(s.size()))
    throw std::invalid_argument("node component out of range");
  return b.col - b.row + s[b.comp];
}

std::vector<Node> addable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int c = 0; c < lambda.level(); ++c) {
    const Partition& p = lambda.component(c);
    for (int i = 1; i <= p.height() + 1; ++i)
      if (i == 1 || p.part(i) < p.part(i - 1)) out.push_back({i, p.part(i) + 1, c});
  }
  return out;
}

std::vector<Node> removable_nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int c = 0; c < lambda.level(); ++c) {
    const Partition& p = lambda.component(c);
    for (int i = 1; i <= p.height(); ++i)
      if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i), c});
  }
  return out;
}

Multipartition add_node(const Multipartition& lambda, const Node& b) {
  if (b.comp < 0 || b.comp >= lambda.level())
    throw std::invalid_argument("node component out of range");
  std::vector<Partition> comps = lambda.components();
  std::vector<int> parts = comps[b.comp].parts();
  if (b.row == static_cast<int>(parts.size()) + 1)
    parts.push_back(0);
  if (b.row < 1 || b.row > static_cast<int>(parts.size()) ||
      parts[b.row - 1] + 1 != b.col)
    throw std::invalid_argument("node is not addable here");
  ++parts[b.row - 1];
  comps[b.comp] = Partition(std::move(parts));  // validates monotonicity
  return Multipartition(std::move(comps));
}

Multipartition remove_node(const Multipartition& lambda, const Node& b) {
  if (b.comp < 0 || b.comp >= lambda.level())
    throw std::invalid_argument("node component out of range");
  std::vector<Partition> comps = lambda.components();
  std::vector<int> parts = comps[b.comp].parts();
  if (b.row < 1 || b.row > static_cast<int>(parts.size()) || parts[b.row - 1] != b.col)
    throw std::invalid_argument("node is not removable here");
  --parts[b.row - 1];
  comps[b.comp] = Partition(std::move(parts));
  return Multipartition(std::move(comps));
}

void require_same_level(const Multipartition& lambda, const Multicharge& s) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (lambda.level() != static_cast<int>(s.size()))
    throw std::invalid_argument("multipartition level and charge length differ");
}

namespace {

int parse_int(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad integer '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t.push_back(ch);
  if (t.empty() || t == "-") return Partition();
  std::vector<int> parts;
  for (const auto& piece : split(t, '.')) parts.push_back(parse_int(piece));
  return Partition(std::move(parts));
}

Multipartition parse_multipartition(const std::string& text) {
  std::vector<Partition> comps;
  for (const auto& piece : split(text, '|')) comps.push_back(parse_partition(piece));
  return Multipartition(std::move(comps));
}

Multicharge parse_charge(const std::string& text) {
  Multicharge s;
  for (const auto& piece : split(text, ',')) {
    if (piece.empty()) throw std::invalid_argument("empty charge entry");
    s.push_back(parse_int(piece));
  }
  return s;
}

std::string format_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << '.';
    os << p.parts()[i];
  }
  return os.str();
}

std::string format_multipartition(const Multipartition& lambda) {
  std::ostringstream os;
  for (int c = 0; c < lambda.level(); ++c) {
    if (c) os << '|';
    os << format_partition(lambda.component(c));
  }
  return os.str();
}

std::string format_charge(const Multicharge& s) {
  std::ostringstream os;
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (c) os << ',';
    os << s[c];
  }
  return os.str();
}

std::vector<Partition> partitions_of_rank(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multipartition> multipartitions_of_rank(int level, int rank) {
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  std::vector<Multipartition> out;
  std::vector<Partition> cur(level);
  auto rec = [&](auto&& self, int c, int left) -> void {
    if (c == level - 1) {
      for (auto& p : partitions_of_rank(left)) {
        cur[c] = p;
        out.emplace_back(cur);
      }
      return;
    }
    for (int n = 0; n <= left; ++n)
      for (auto& p : partitions_of_rank(n)) {
        cur[c] = p;
        self(self, c + 1, left - n);
      }
  };
  rec(rec, 0, rank);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fock
