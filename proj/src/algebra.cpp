#include "xmg/algebra.hpp"

#include <deque>
#include <map>

#include "xmg/error.hpp"

namespace xmg {

std::string_view law_name(Law law) {
  switch (law) {
    case Law::Associativity: return "associativity";
    case Law::Identity: return "identity";
    case Law::UnitLaw: return "unit";
    case Law::ActionLaw: return "action";
    case Law::CompositionLaw: return "composition";
    case Law::IncidenceCompat: return "incidence-compatibility";
    case Law::VertexSquare: return "vertex-square";
    case Law::ArcSquare: return "arc-square";
    case Law::EdgeSquare: return "edge-square";
    case Law::TableShape: return "table-shape";
  }
  return "unknown";
}

namespace {

std::string describe(Law law, const std::vector<std::size_t>& witness) {
  std::string msg = std::string(law_name(law)) + " law violated at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) msg += ", ";
    msg += std::to_string(witness[i]);
  }
  return msg + ")";
}

}  // namespace

LawViolation::LawViolation(Law law, std::vector<std::size_t> witness)
    : Error(describe(law, witness)), law_(law), witness_(std::move(witness)) {}

FiniteMonoid::FiniteMonoid() : size_(1), identity_(0), table_{0} {}

bool FiniteMonoid::is_group() const {
  for (Elem a = 0; a < size_; ++a) {
    if (!inverse(a)) return false;
  }
  return true;
}

std::optional<Elem> FiniteMonoid::inverse(Elem a) const {
  for (Elem b = 0; b < size_; ++b) {
    if (mul(a, b) == identity_ && mul(b, a) == identity_) return b;
  }
  return std::nullopt;
}

std::vector<Elem> FiniteMonoid::generators() const {
  std::vector<Elem> gens;
  std::vector<bool> reached(size_, false);
  reached[identity_] = true;
  auto close = [&] {
    std::deque<Elem> queue;
    for (Elem a = 0; a < size_; ++a) {
      if (reached[a]) queue.push_back(a);
    }
    while (!queue.empty()) {
      Elem a = queue.front();
      queue.pop_front();
      for (Elem g : gens) {
        Elem b = mul(g, a);
        if (!reached[b]) {
          reached[b] = true;
          queue.push_back(b);
        }
      }
    }
  };
  for (Elem a = 0; a < size_; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    close();
  }
  return gens;
}

std::vector<std::vector<Elem>> FiniteMonoid::table() const {
  std::vector<std::vector<Elem>> rows(size_);
  for (Elem a = 0; a < size_; ++a) {
    rows[a].assign(table_.begin() + a * size_, table_.begin() + (a + 1) * size_);
  }
  return rows;
}

FiniteMonoid build_monoid(const std::vector<std::vector<Elem>>& table, Elem identity) {
  const std::size_t n = table.size();
  if (n == 0 || identity >= n) throw LawViolation(Law::TableShape, {n, identity});
  FiniteMonoid m;
  m.size_ = n;
  m.identity_ = identity;
  m.table_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    if (table[a].size() != n) throw LawViolation(Law::TableShape, {a});
    for (Elem b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw LawViolation(Law::TableShape, {a, b});
      m.table_[a * n + b] = table[a][b];
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (m.mul(identity, a) != a || m.mul(a, identity) != a) {
      throw LawViolation(Law::Identity, {a});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
          throw LawViolation(Law::Associativity, {a, b, c});
        }
      }
    }
  }
  return m;
}

std::vector<std::vector<Point>> RightMSet::table() const {
  std::vector<std::vector<Point>> rows(size_);
  for (Point x = 0; x < size_; ++x) {
    rows[x].assign(table_.begin() + x * monoid_size_, table_.begin() + (x + 1) * monoid_size_);
  }
  return rows;
}

RightMSet validate_mset(const FiniteMonoid& monoid, const std::vector<std::vector<Point>>& act) {
  RightMSet s;
  s.size_ = act.size();
  s.monoid_size_ = monoid.size();
  s.table_.reserve(s.size_ * s.monoid_size_);
  for (Point x = 0; x < s.size_; ++x) {
    if (act[x].size() != s.monoid_size_) throw LawViolation(Law::TableShape, {x});
    for (Elem m = 0; m < s.monoid_size_; ++m) {
      if (act[x][m] >= s.size_) throw LawViolation(Law::TableShape, {x, m});
      s.table_.push_back(act[x][m]);
    }
  }
  for (Point x = 0; x < s.size_; ++x) {
    if (s.act(x, monoid.identity()) != x) throw LawViolation(Law::UnitLaw, {x});
  }
  for (Point x = 0; x < s.size_; ++x) {
    for (Elem m = 0; m < s.monoid_size_; ++m) {
      for (Elem n = 0; n < s.monoid_size_; ++n) {
        if (s.act(s.act(x, m), n) != s.act(x, monoid.mul(m, n))) {
          throw LawViolation(Law::ActionLaw, {x, m, n});
        }
      }
    }
  }
  return s;
}

TransformationMonoid transformation_monoid(std::size_t n,
                                           const std::vector<std::vector<Point>>& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != n) throw InvalidGenerator(i);
    for (Point y : generators[i]) {
      if (y >= n) throw InvalidGenerator(i);
    }
  }
  using Map = std::vector<Point>;
  Map id(n);
  for (Point x = 0; x < n; ++x) id[x] = x;

  std::vector<Map> maps{id};
  std::map<Map, Elem> index{{id, 0}};
  // then(f, g) = "apply f, then g"
  auto then = [n](const Map& f, const Map& g) {
    Map h(n);
    for (Point x = 0; x < n; ++x) h[x] = g[f[x]];
    return h;
  };
  for (std::size_t head = 0; head < maps.size(); ++head) {
    for (const Map& g : generators) {
      Map h = then(maps[head], g);
      if (index.emplace(h, maps.size()).second) maps.push_back(std::move(h));
    }
  }

  const std::size_t size = maps.size();
  std::vector<std::vector<Elem>> table(size, std::vector<Elem>(size));
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) table[a][b] = index.at(then(maps[a], maps[b]));
  }
  FiniteMonoid monoid = build_monoid(table, 0);

  std::vector<std::vector<Point>> act(n, std::vector<Point>(size));
  for (Point x = 0; x < n; ++x) {
    for (Elem m = 0; m < size; ++m) act[x][m] = maps[m][x];
  }
  RightMSet carrier = validate_mset(monoid, act);
  return {std::move(monoid), std::move(carrier), std::move(maps)};
}

ContextPtr make_context(FiniteMonoid monoid, RightMSet carrier) {
  if (carrier.monoid_size() != monoid.size()) throw ContextMismatch();
  return std::make_shared<const Context>(Context{std::move(monoid), std::move(carrier)});
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

ContextPtr trivial_context(std::size_t n) {
  FiniteMonoid m;
  std::vector<std::vector<Point>> act(n);
  for (Point x = 0; x < n; ++x) act[x] = {x};
  return make_context(m, validate_mset(m, act));
}

ContextPtr aut_context(std::size_t n) {
  std::vector<std::vector<Point>> gens;
  for (Point i = 0; i + 1 < n; ++i) {
    std::vector<Point> t(n);
    for (Point x = 0; x < n; ++x) t[x] = x;
    std::swap(t[i], t[i + 1]);
    gens.push_back(std::move(t));
  }
  return transformation_context(n, gens);
}

ContextPtr idempotent_context(std::size_t n) {
  FiniteMonoid m = build_monoid({{0, 1}, {1, 1}}, 0);
  std::vector<std::vector<Point>> act(n);
  for (Point x = 0; x < n; ++x) act[x] = {x, 0};
  return make_context(m, validate_mset(m, act));
}

ContextPtr transformation_context(std::size_t n,
                                  const std::vector<std::vector<Point>>& generators) {
  TransformationMonoid t = transformation_monoid(n, generators);
  return make_context(std::move(t.monoid), std::move(t.carrier));
}

bool is_full_automorphism_context(const Context& ctx) {
  const std::size_t n = ctx.points();
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;
  if (ctx.elements() != factorial) return false;
  std::map<std::vector<Point>, Elem> seen;
  for (Elem m = 0; m < ctx.elements(); ++m) {
    std::vector<Point> image(n);
    std::vector<bool> hit(n, false);
    for (Point x = 0; x < n; ++x) {
      image[x] = ctx.act(x, m);
      if (hit[image[x]]) return false;
      hit[image[x]] = true;
    }
    if (!seen.emplace(std::move(image), m).second) return false;
  }
  return true;
}

std::vector<Elem> transposition_elements(const Context& ctx) {
  std::vector<Elem> out;
  for (Elem m = 0; m < ctx.elements(); ++m) {
    std::size_t moved = 0;
    bool involutive = true;
    for (Point x = 0; x < ctx.points(); ++x) {
      Point y = ctx.act(x, m);
      if (y != x) ++moved;
      if (ctx.act(y, m) != x) involutive = false;
    }
    if (moved == 2 && involutive) out.push_back(m);
  }
  return out;
}

}  // namespace xmg
