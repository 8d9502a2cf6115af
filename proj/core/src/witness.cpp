#include "orbicurve/witness.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <optional>
#include <thread>

#include "orbicurve/version.hpp"

namespace orbicurve {

WitnessCertificate certify_torsionfree_kernel(const OrbifoldPresentation& pres,
                                              const GeneratorImages& images,
                                              std::uint64_t cap,
                                              OrderBackend backend) {
  std::string failing = first_failing_relation(pres, images);
  if (!failing.empty())
    throw DomainError("images violate relation " + failing);
  WitnessCertificate cert{pres, images};
  cert.image_group_order = group_order(all_images(images), cap, backend);
  cert.torsionfree = true;
  for (std::size_t j = 0; j < pres.weights().size(); ++j) {
    if (images.sigma[j].order() != pres.weights()[j]) {
      cert.torsionfree = false;
      break;
    }
  }
  cert.normal = true;
  return cert;
}

WitnessCertificate certificate_from_triangle(const TriangleWitness& witness,
                                             std::uint64_t cap,
                                             OrderBackend backend) {
  OrbifoldPresentation pres(0, {witness.a, witness.b, witness.c});
  GeneratorImages images{{}, {}, {witness.c1, witness.c2, witness.c3}};
  return certify_torsionfree_kernel(pres, images, cap, backend);
}

namespace {

// Smallest symmetric-group degree containing an element of order k: the sum
// of the maximal prime-power divisors of k (0 for k = 1).
Point min_degree_for_order(Weight k) {
  Weight total = 0;
  Weight rest = k;
  for (Weight p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    Weight pe = 1;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    total += pe;
  }
  if (rest > 1) total += rest;
  return static_cast<Point>(total);
}

// One candidate of order `a` per cycle type in S_n: partitions of n into
// divisors of `a` with lcm exactly `a`, parts descending, laid out on
// consecutive points. Image tables are 1-based with slot 0 unused; the list
// comes back sorted by table.
std::vector<std::vector<Point>> order_a_representatives(Point n, Weight a) {
  std::vector<Weight> divisors;
  for (Weight d = 1; d <= a && d <= static_cast<Weight>(n); ++d)
    if (a % d == 0) divisors.push_back(d);
  std::sort(divisors.rbegin(), divisors.rend());

  std::vector<std::vector<Point>> tables;
  std::vector<Weight> parts;
  std::function<void(Weight, std::size_t, Weight)> gen = [&](Weight remaining,
                                                             std::size_t from,
                                                             Weight running_lcm) {
    if (remaining == 0) {
      if (running_lcm != a) return;
      std::vector<Point> table(static_cast<std::size_t>(n) + 1);
      Point pos = 1;
      for (Weight part : parts) {
        for (Weight i = 0; i < part; ++i)
          table[pos + i] = (i + 1 == part) ? pos : pos + static_cast<Point>(i) + 1;
        pos += static_cast<Point>(part);
      }
      tables.push_back(std::move(table));
      return;
    }
    for (std::size_t d = from; d < divisors.size(); ++d) {
      if (divisors[d] > remaining) continue;
      parts.push_back(divisors[d]);
      gen(remaining - divisors[d], d, std::lcm(running_lcm, divisors[d]));
      parts.pop_back();
    }
  };
  gen(static_cast<Weight>(n), 0, 1);
  std::sort(tables.begin(), tables.end());
  return tables;
}

// Enumerates the image tables of all order-b elements of S_n in
// lexicographic order, testing each against a fixed c1 table for
// order(c1 c2) == c. Cycle structure is tracked incrementally: assigning
// x -> y either closes the open path ending at x (its length must divide b)
// or splices two open paths.
class OrderBScanner {
public:
  OrderBScanner(Point n, Weight b, Weight c, const std::vector<Point>& c1_table)
      : n_(n),
        b_(static_cast<std::uint64_t>(b)),
        c_(static_cast<std::uint64_t>(c)),
        c1_(c1_table),
        img_(n + 1, 0),
        has_in_(n + 1, 0),
        head_of_tail_(n + 1),
        tail_of_head_(n + 1),
        edges_of_(n + 1, 0),
        visited_(n + 1, 0) {}

  // Lex-first valid c2 with image-of-1 equal to v, or nullopt. `abort_scan`
  // is polled periodically; aborting returns nullopt.
  std::optional<std::vector<Point>> scan_block(
      Point v, const std::function<bool()>& abort_scan) {
    std::fill(img_.begin(), img_.end(), 0);
    std::fill(has_in_.begin(), has_in_.end(), 0);
    std::iota(head_of_tail_.begin(), head_of_tail_.end(), 0);
    std::iota(tail_of_head_.begin(), tail_of_head_.end(), 0);
    std::fill(edges_of_.begin(), edges_of_.end(), 0);
    lcm_closed_ = 1;
    steps_ = 0;
    aborted_ = false;
    abort_scan_ = &abort_scan;
    if (!assign(1, v)) return std::nullopt;
    return std::vector<Point>(img_.begin() + 1, img_.end());
  }

private:
  bool assign(Point x, Point y) {
    Point head = head_of_tail_[x];
    if (y == head) { // closes the cycle through x
      std::uint64_t len = edges_of_[head] + 1;
      if (b_ % len) return false;
      std::uint64_t saved_lcm = lcm_closed_;
      lcm_closed_ = std::lcm(lcm_closed_, len);
      img_[x] = y;
      has_in_[y] = 1;
      if (next(x)) return true;
      img_[x] = 0;
      has_in_[y] = 0;
      lcm_closed_ = saved_lcm;
      return false;
    }
    // y heads another open path; splice it onto the one ending at x.
    Point tail = tail_of_head_[y];
    Point spliced_edges = edges_of_[y];
    head_of_tail_[tail] = head;
    tail_of_head_[head] = tail;
    edges_of_[head] += 1 + spliced_edges;
    img_[x] = y;
    has_in_[y] = 1;
    bool hit = next(x);
    if (!hit) {
      img_[x] = 0;
      has_in_[y] = 0;
      head_of_tail_[tail] = y;
      tail_of_head_[head] = x;
      edges_of_[head] -= 1 + spliced_edges;
    }
    return hit;
  }

  bool next(Point x) {
    if (x == n_) return lcm_closed_ == b_ && product_has_order_c();
    if ((++steps_ & 8191) == 0 && (*abort_scan_)()) aborted_ = true;
    if (aborted_) return false;
    Point node = x + 1;
    for (Point y = 1; y <= n_; ++y) {
      if (has_in_[y]) continue;
      if (assign(node, y)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool product_has_order_c() {
    ++epoch_;
    std::uint64_t l = 1;
    for (Point s = 1; s <= n_; ++s) {
      if (visited_[s] == epoch_) continue;
      std::uint64_t len = 0;
      Point x = s;
      do {
        visited_[x] = epoch_;
        x = img_[c1_[x]];
        ++len;
      } while (x != s);
      l = std::lcm(l, len);
      if (l > c_ || c_ % l) return false;
    }
    return l == c_;
  }

  Point n_;
  std::uint64_t b_, c_;
  const std::vector<Point>& c1_;
  std::vector<Point> img_;
  std::vector<char> has_in_;
  std::vector<Point> head_of_tail_, tail_of_head_;
  std::vector<Point> edges_of_;
  std::vector<std::uint32_t> visited_;
  std::uint64_t lcm_closed_ = 1;
  std::uint64_t steps_ = 0;
  std::uint32_t epoch_ = 0;
  bool aborted_ = false;
  const std::function<bool()>* abort_scan_ = nullptr;
};

// Scan blocks img(1) = 1..n in order; with several workers the blocks are
// distributed, a block's first hit is its lexicographic minimum, and the
// smallest hit block wins, so the outcome never depends on scheduling.
std::optional<std::vector<Point>> scan_c2(Point n, Weight b, Weight c,
                                          const std::vector<Point>& c1_table,
                                          unsigned workers) {
  auto never = [] { return false; };
  if (workers <= 1 || n < 8) {
    OrderBScanner scanner(n, b, c, c1_table);
    for (Point v = 1; v <= n; ++v)
      if (auto hit = scanner.scan_block(v, never)) return hit;
    return std::nullopt;
  }

  std::atomic<Point> next_block{1};
  std::atomic<Point> best_block{static_cast<Point>(n + 1)};
  std::vector<std::optional<std::vector<Point>>> hits(n + 1);
  auto worker = [&] {
    OrderBScanner scanner(n, b, c, c1_table);
    for (;;) {
      Point v = next_block.fetch_add(1);
      if (v > n) return;
      if (v > best_block.load()) continue;
      auto hit = scanner.scan_block(v, [&] { return best_block.load() < v; });
      if (hit) {
        hits[v] = std::move(hit);
        Point cur = best_block.load();
        while (v < cur && !best_block.compare_exchange_weak(cur, v)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<unsigned>(workers, n);
  pool.reserve(count);
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Point w = best_block.load();
  if (w <= n) return hits[w];
  return std::nullopt;
}

Permutation permutation_from_table(const std::vector<Point>& table_1based) {
  return Permutation::from_images(
      std::vector<Point>(table_1based.begin() + 1, table_1based.end()));
}

} // namespace

TriangleWitness fox_witness_search(Weight a, Weight b, Weight c,
                                   Point max_degree, unsigned worker_count) {
  if (a < 1 || b < 1 || c < 1)
    throw DomainError("witness orders must be positive integers");
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  if (worker_count == 0)
    worker_count = std::max(1u, std::thread::hardware_concurrency());

  Point start = std::max({Point(1), min_degree_for_order(a),
                          min_degree_for_order(b), min_degree_for_order(c)});
  for (Point n = start; n <= max_degree; ++n) {
    for (const auto& c1_table : order_a_representatives(n, a)) {
      auto hit = scan_c2(n, b, c, c1_table, worker_count);
      if (!hit) continue;
      TriangleWitness w;
      w.a = a;
      w.b = b;
      w.c = c;
      w.degree = n;
      w.c1 = permutation_from_table(c1_table);
      w.c2 = Permutation::from_images(std::move(*hit));
      w.c3 = (w.c1 * w.c2).inverse();
      return w;
    }
  }
  throw SearchExhaustedError(
      "no (" + std::to_string(a) + "," + std::to_string(b) + "," +
          std::to_string(c) + ") witness up to degree " + std::to_string(max_degree),
      max_degree);
}

TriangleWitness trivial_cyclic_witness(Weight n) {
  if (n < 1) throw DomainError("cycle length must be positive");
  std::vector<Point> images(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = static_cast<Point>((i + 1) % images.size() + 1);
  TriangleWitness w;
  w.a = w.b = n;
  w.c = 1;
  w.degree = static_cast<Point>(n);
  w.c1 = Permutation::from_images(std::move(images));
  w.c2 = w.c1.inverse();
  w.c3 = Permutation{};
  return w;
}

GeneratorImages reduction_images(const WeightedCurve& curve,
                                 const TriangleWitness& witness) {
  const auto& w = curve.weights();
  if (w.size() < 3)
    throw DomainError("reduction needs at least three weighted points");
  if (witness.a != w[0] || witness.b != w[1] || witness.c != w[2])
    throw DomainError("witness orders do not match the first three weights of " +
                      curve.label());
  GeneratorImages images;
  images.alpha.assign(static_cast<std::size_t>(curve.genus()), Permutation{});
  images.beta = images.alpha;
  images.sigma.assign(w.size(), Permutation{});
  images.sigma[0] = witness.c1;
  images.sigma[1] = witness.c2;
  images.sigma[2] = witness.c3;
  return images;
}

GeneratorImages surface_abelianization_images(std::int64_t genus, Weight k) {
  if (genus < 0) throw DomainError("negative genus");
  if (k < 1) throw DomainError("cyclic order must be positive");
  GeneratorImages images;
  images.alpha.assign(static_cast<std::size_t>(genus), Permutation{});
  images.beta = images.alpha;
  if (genus >= 1 && k > 1) {
    std::vector<Point> first(static_cast<std::size_t>(2 * k));
    std::iota(first.begin(), first.end(), 1);
    std::vector<Point> second = first;
    for (Weight i = 0; i < k; ++i) {
      first[i] = static_cast<Point>((i + 1) % k + 1);
      second[k + i] = static_cast<Point>(k + (i + 1) % k + 1);
    }
    images.alpha[0] = Permutation::from_images(std::move(first));
    images.beta[0] = Permutation::from_images(std::move(second));
  }
  return images;
}

namespace {

nlohmann::json images_to_json(const GeneratorImages& images) {
  auto strs = [](const std::vector<Permutation>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p.str());
    return out;
  };
  return {{"alpha", strs(images.alpha)},
          {"beta", strs(images.beta)},
          {"sigma", strs(images.sigma)}};
}

} // namespace

std::string certificate_to_json(const WitnessCertificate& cert) {
  nlohmann::json j;
  j["schema_version"] = json_schema_version;
  j["tool_version"] = version;
  j["kind"] = "witness-certificate";
  j["presentation"] = {{"genus", cert.presentation.genus()},
                       {"weights", cert.presentation.weights()}};
  j["images"] = images_to_json(cert.images);
  j["image_group_order"] = cert.image_group_order.str();
  j["torsionfree"] = cert.torsionfree;
  j["normal"] = cert.normal;
  return j.dump(2) + "\n";
}

std::pair<OrbifoldPresentation, GeneratorImages> parse_homomorphism_json(
    const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    const auto& p = j.at("presentation");
    OrbifoldPresentation pres(p.at("genus").get<std::int64_t>(),
                              p.at("weights").get<std::vector<Weight>>());
    const auto& im = j.at("images");
    auto perms = [](const nlohmann::json& arr) {
      std::vector<Permutation> out;
      for (const auto& s : arr) out.push_back(Permutation::parse(s.get<std::string>()));
      return out;
    };
    GeneratorImages images{perms(im.at("alpha")), perms(im.at("beta")),
                           perms(im.at("sigma"))};
    return {std::move(pres), std::move(images)};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate document: ") + e.what());
  }
}

} // namespace orbicurve
