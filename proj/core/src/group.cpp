#include "sgk/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "sgk/error.hpp"

namespace sgk {

std::size_t element_cap() {
  if (const char* env = std::getenv("SGK_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultElementCap;
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) fail(ErrorCode::NotInGroup, p.to_cycles() + " is not an element of the group");
  return *id;
}

ElementId GroupTable::multiply(ElementId a, ElementId b) const {
  return index_.at(elements_[a] * elements_[b]);
}

GroupTable GroupTable::from_closed_elements(std::size_t degree, std::vector<Permutation> generators,
                                            std::vector<Permutation> sorted_elements) {
  GroupTable table;
  table.degree_ = degree;
  table.generators_ = std::move(generators);
  table.elements_ = std::move(sorted_elements);
  table.index_.reserve(table.elements_.size() * 2);
  for (std::size_t i = 0; i < table.elements_.size(); ++i) {
    table.index_.emplace(table.elements_[i], static_cast<ElementId>(i));
  }
  table.inverses_.resize(table.elements_.size());
  for (std::size_t i = 0; i < table.elements_.size(); ++i) {
    table.inverses_[i] = table.index_.at(table.elements_[i].inverse());
  }
  for (const auto& g : table.generators_) table.generator_ids_.push_back(table.id_of(g));
  return table;
}

GroupTable enumerate_group(const GroupSpec& spec, std::size_t cap) {
  for (const auto& g : spec.generators) {
    if (g.degree() != spec.degree) {
      fail(ErrorCode::DegreeMismatch, "generator " + g.to_cycles() + " has degree " +
                                          std::to_string(g.degree()) + ", expected " +
                                          std::to_string(spec.degree));
    }
  }
  std::vector<Permutation> generators = spec.generators;
  if (generators.empty()) generators.push_back(Permutation::identity(spec.degree));

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<std::size_t> queue;
  auto admit = [&](Permutation p) {
    if (seen.insert(p).second) {
      if (elements.size() >= cap) {
        fail(ErrorCode::CapExceeded, "group closure exceeded " + std::to_string(cap) + " elements");
      }
      elements.push_back(std::move(p));
      queue.push_back(elements.size() - 1);
    }
  };
  admit(Permutation::identity(spec.degree));
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) admit(elements[i] * g);
  }
  std::sort(elements.begin(), elements.end());
  return GroupTable::from_closed_elements(spec.degree, std::move(generators), std::move(elements));
}

GroupTable generate_group(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
  return enumerate_group(GroupSpec{degree, std::move(generators)}, cap);
}

std::vector<Permutation> greedy_generators(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermutationHash> closure{Permutation::identity(degree)};
  for (const auto& e : elements) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    std::deque<Permutation> queue(frontier.begin(), frontier.end());
    while (!queue.empty()) {
      Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        Permutation y = x * g;
        if (closure.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  if (gens.empty()) gens.push_back(Permutation::identity(degree));
  return gens;
}

GroupTable group_from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto gens = greedy_generators(degree, elements);
  return GroupTable::from_closed_elements(degree, std::move(gens), std::move(elements));
}

std::vector<Point> orbit(const GroupTable& group, Point point) {
  if (point >= group.degree()) fail(ErrorCode::PointOutOfRange, "point outside the domain");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (const auto& g : group.generators()) {
      Point q = g(result[i]);
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<Point>> orbits(const GroupTable& group) {
  std::vector<bool> done(group.degree(), false);
  std::vector<std::vector<Point>> result;
  for (Point p = 0; p < group.degree(); ++p) {
    if (done[p]) continue;
    auto o = orbit(group, p);
    for (Point q : o) done[q] = true;
    result.push_back(std::move(o));
  }
  return result;
}

std::vector<ElementId> stabilizer_ids(const GroupTable& group, Point point) {
  if (point >= group.degree()) fail(ErrorCode::PointOutOfRange, "point outside the domain");
  std::vector<ElementId> ids;
  for (ElementId i = 0; i < group.order(); ++i) {
    if (group.element(i)(point) == point) ids.push_back(i);
  }
  return ids;
}

GroupTable stabilizer(const GroupTable& group, Point point) {
  std::vector<Permutation> elements;
  for (ElementId id : stabilizer_ids(group, point)) elements.push_back(group.element(id));
  return group_from_elements(group.degree(), std::move(elements));
}

bool is_transitive(const GroupTable& group, std::size_t domain_size) {
  if (group.degree() != domain_size) {
    fail(ErrorCode::DegreeMismatch, "group degree " + std::to_string(group.degree()) +
                                        " differs from domain size " + std::to_string(domain_size));
  }
  if (domain_size == 0) return true;
  return orbit(group, 0).size() == domain_size;
}

PointAction natural_action(const GroupTable& group) {
  PointAction action;
  action.domain_size = group.degree();
  action.images.reserve(group.order());
  for (const auto& g : group.elements()) action.images.emplace_back(g.images().begin(), g.images().end());
  return action;
}

std::vector<Point> action_orbit(const GroupTable& group, const PointAction& action, Point point) {
  std::vector<bool> seen(action.domain_size, false);
  std::vector<Point> result{point};
  seen[point] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (ElementId g : group.generator_ids()) {
      Point q = action.apply(g, result[i]);
      if (!seen[q]) {
        seen[q] = true;
        result.push_back(q);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool action_is_transitive(const GroupTable& group, const PointAction& action) {
  if (action.domain_size == 0) return true;
  return action_orbit(group, action, 0).size() == action.domain_size;
}

std::optional<std::vector<Point>> permutation_equivalent(const GroupTable& group,
                                                         const PointAction& first,
                                                         const PointAction& second) {
  if (first.images.size() != group.order() || second.images.size() != group.order()) {
    fail(ErrorCode::DegreeMismatch, "action tables must cover every group element");
  }
  if (!action_is_transitive(group, first) || !action_is_transitive(group, second)) {
    fail(ErrorCode::NotTransitive, "permutation equivalence needs transitive actions");
  }
  if (first.domain_size != second.domain_size) return std::nullopt;
  const std::size_t n = first.domain_size;
  if (n == 0) return std::vector<Point>{};

  constexpr Point kUnset = ~Point{0};
  for (Point target = 0; target < n; ++target) {
    std::vector<Point> eta(n, kUnset);
    eta[0] = target;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t i = 0; ok && i < queue.size(); ++i) {
      Point w = queue[i];
      for (ElementId g : group.generator_ids()) {
        Point w2 = first.apply(g, w);
        Point t2 = second.apply(g, eta[w]);
        if (eta[w2] == kUnset) {
          eta[w2] = t2;
          queue.push_back(w2);
        } else if (eta[w2] != t2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    for (Point t : eta) {
      if (hit[t]) {
        ok = false;
        break;
      }
      hit[t] = true;
    }
    if (ok) return eta;
  }
  return std::nullopt;
}

GroupSpec read_group_spec(std::istream& in) {
  GroupSpec spec;
  bool have_degree = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (!have_degree) {
      std::istringstream fields(line);
      std::string key;
      long long degree = -1;
      fields >> key >> degree;
      if (key != "degree:" || degree < 0) {
        fail(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected 'degree: <n>'");
      }
      spec.degree = static_cast<std::size_t>(degree);
      have_degree = true;
      continue;
    }
    spec.generators.push_back(parse_cycles(line, spec.degree));
  }
  if (!have_degree) fail(ErrorCode::SyntaxError, "group file has no 'degree:' line");
  if (spec.generators.empty()) spec.generators.push_back(Permutation::identity(spec.degree));
  return spec;
}

GroupSpec read_group_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_group_spec(in);
}

void write_group_spec(std::ostream& out, const GroupSpec& spec) {
  out << "degree: " << spec.degree << '\n';
  for (const auto& g : spec.generators) out << g.to_cycles() << '\n';
}

}  // namespace sgk
