#include "qschubert/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace qschubert {

namespace {

void normalize(std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) {
      throw std::invalid_argument("partition parts must be nonnegative");
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(parts_); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) {
    return false;
  }
  for (int i = 1; i <= other.length(); ++i) {
    if (other.part(i) > part(i)) {
      return false;
    }
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(first()), 0);
  for (int row : parts_) {
    for (int c = 0; c < row; ++c) {
      ++out[static_cast<std::size_t>(c)];
    }
  }
  return Partition(std::move(out));
}

GrassmannianContext::GrassmannianContext(int rows, int cols) : l(rows), k(cols) {
  if (l < 1 || k < 1) {
    throw std::invalid_argument("Grassmannian context needs l >= 1 and k >= 1");
  }
}

std::string to_string(const Partition& p) {
  if (p.empty()) {
    return "-";
  }
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) {
      out += ',';
    }
    out += std::to_string(p.part(i));
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") {
    return {};
  }
  if (text.empty()) {
    throw ParseError("empty partition string (use \"-\" for the empty partition)");
  }
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 1 ||
        token.front() == '+') {
      throw ParseError("bad partition part '" + std::string(token) + "' in \"" + std::string(text) + "\"");
    }
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("partition \"" + std::string(text) + "\" is not weakly decreasing");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) {
    return {};
  }
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

bool fits_in_box(const Partition& p, const GrassmannianContext& ctx) {
  return p.length() <= ctx.l && p.first() <= ctx.k;
}

void require_in_box(const Partition& p, const GrassmannianContext& ctx, std::string_view what) {
  if (!fits_in_box(p, ctx)) {
    throw BoxError(std::string(what) + " " + to_string(p) + " does not fit in the " +
                   std::to_string(ctx.l) + "x" + std::to_string(ctx.k) + " box");
  }
}

Partition complement(const Partition& p, const GrassmannianContext& ctx) {
  require_in_box(p, ctx);
  std::vector<int> out(static_cast<std::size_t>(ctx.l));
  for (int i = 1; i <= ctx.l; ++i) {
    out[static_cast<std::size_t>(i - 1)] = ctx.k - p.part(ctx.l + 1 - i);
  }
  return Partition(std::move(out));
}

std::vector<Cell> overlap_with_rotation(const Partition& lam, const Partition& mu,
                                        const GrassmannianContext& ctx) {
  require_in_box(lam, ctx, "lambda");
  require_in_box(mu, ctx, "mu");
  std::vector<Cell> cells;
  for (int i = 1; i <= lam.length(); ++i) {
    int from = ctx.k - mu.part(ctx.l + 1 - i) + 1;
    for (int j = std::max(from, 1); j <= lam.part(i); ++j) {
      cells.push_back({i, j});
    }
  }
  return cells;
}

int largest_square_in_overlap(const Partition& lam, const Partition& mu, const GrassmannianContext& ctx) {
  auto cells = overlap_with_rotation(lam, mu, ctx);
  // Classic largest-square DP over the box grid.
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(ctx.l + 2),
                                     std::vector<int>(static_cast<std::size_t>(ctx.k + 2), 0));
  for (const Cell& c : cells) {
    grid[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = 1;
  }
  int best = 0;
  for (int i = ctx.l; i >= 1; --i) {
    for (int j = ctx.k; j >= 1; --j) {
      auto& g = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (g != 0) {
        g = 1 + std::min({grid[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)],
                          grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)],
                          grid[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)]});
        best = std::max(best, g);
      }
    }
  }
  return best;
}

int durfee(const Partition& p) {
  int d = 0;
  while (p.part(d + 1) >= d + 1) {
    ++d;
  }
  return d;
}

FrobeniusCoordinates to_frobenius(const Partition& p) {
  const int t = durfee(p);
  const Partition conj = p.conjugate();
  FrobeniusCoordinates f;
  for (int i = 1; i <= t; ++i) {
    f.alpha.push_back(p.part(i) - i);
    f.beta.push_back(conj.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoordinates& f) {
  if (f.alpha.size() != f.beta.size()) {
    throw std::invalid_argument("Frobenius coordinates need equal arm and leg counts");
  }
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) {
        return false;
      }
    }
    return true;
  };
  if (!strictly_decreasing(f.alpha) || !strictly_decreasing(f.beta)) {
    throw std::invalid_argument("Frobenius coordinates must be strictly decreasing and nonnegative");
  }
  const int t = static_cast<int>(f.alpha.size());
  if (t == 0) {
    return {};
  }
  // Rows 1..t from the arms; rows below the Durfee square from the legs.
  const int rows = t + f.beta.front();
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  for (int i = 1; i <= t; ++i) {
    parts[static_cast<std::size_t>(i - 1)] = f.alpha[static_cast<std::size_t>(i - 1)] + i;
  }
  for (int r = t + 1; r <= rows; ++r) {
    int count = 0;
    for (int j = 1; j <= t; ++j) {
      if (f.beta[static_cast<std::size_t>(j - 1)] + j >= r) {
        ++count;
      }
    }
    parts[static_cast<std::size_t>(r - 1)] = count;
  }
  return Partition(std::move(parts));
}

Partition hook_class(int arm, int leg) {
  if (arm < 0 || leg < 0) {
    throw std::invalid_argument("hook arm and leg must be nonnegative");
  }
  std::vector<int> parts(static_cast<std::size_t>(leg + 1), 1);
  parts[0] = arm + 1;
  return Partition(std::move(parts));
}

Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> out(static_cast<std::size_t>(std::min(a.length(), b.length())));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) {
    out[static_cast<std::size_t>(i - 1)] = std::min(a.part(i), b.part(i));
  }
  return Partition(std::move(out));
}

Partition unite(const Partition& a, const Partition& b) {
  std::vector<int> out(static_cast<std::size_t>(std::max(a.length(), b.length())));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) {
    out[static_cast<std::size_t>(i - 1)] = std::max(a.part(i), b.part(i));
  }
  return Partition(std::move(out));
}

namespace {

// Emits extensions before the prefix itself, so the stream is lexicographically descending.
void enumerate(std::vector<int>& prefix, int remaining, int max_part, int max_length, bool exact,
               const std::function<void(const Partition&)>& visit) {
  if (static_cast<int>(prefix.size()) < max_length) {
    int top = std::min(max_part, remaining);
    if (!prefix.empty()) {
      top = std::min(top, prefix.back());
    }
    for (int part = top; part >= 1; --part) {
      prefix.push_back(part);
      enumerate(prefix, remaining - part, max_part, max_length, exact, visit);
      prefix.pop_back();
    }
  }
  if (!exact || remaining == 0) {
    visit(Partition(prefix));
  }
}

}  // namespace

void for_each_partition(int max_size, int max_part, int max_length,
                        const std::function<void(const Partition&)>& visit) {
  if (max_size < 0 || max_part < 0 || max_length < 0) {
    return;
  }
  std::vector<int> prefix;
  enumerate(prefix, max_size, max_part, max_length, false, visit);
}

std::vector<Partition> partitions_up_to(int max_size, int max_part, int max_length) {
  std::vector<Partition> out;
  for_each_partition(max_size, max_part, max_length, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> partitions_of(int size, int max_part, int max_length) {
  std::vector<Partition> out;
  if (size < 0 || max_part < 0 || max_length < 0) {
    return out;
  }
  std::vector<int> prefix;
  enumerate(prefix, size, max_part, max_length, true, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::vector<Partition> partitions_in_box(const GrassmannianContext& ctx) {
  return partitions_up_to(ctx.l * ctx.k, ctx.k, ctx.l);
}

long long box_partition_count(const GrassmannianContext& ctx) {
  long long c = 1;
  for (int i = 1; i <= ctx.l; ++i) {
    c = c * (ctx.k + i) / i;
  }
  return c;
}

}  // namespace qschubert
