#include "invmon/freeprod.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "invmon/errors.hpp"

namespace invmon {

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table,
                           std::vector<std::string>      names)
      : _table(std::move(table)), _names(std::move(names)) {
    int const n = static_cast<int>(_table.size());
    if (n == 0) {
      throw InvalidArgument("group table must be nonempty");
    }
    for (auto const& row : _table) {
      if (static_cast<int>(row.size()) != n) {
        throw InvalidArgument("group table must be square");
      }
      for (int x : row) {
        if (x < 0 || x >= n) {
          throw InvalidArgument("group table entry out of range");
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (_table[0][x] != x || _table[x][0] != x) {
        throw InvalidArgument("element 0 must be the identity");
      }
    }
    _inverse.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (_table[x][y] == 0 && _table[y][x] == 0) {
          _inverse[x] = y;
          break;
        }
      }
      if (_inverse[x] < 0) {
        throw InvalidArgument("element " + std::to_string(x)
                              + " has no inverse");
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (_table[_table[x][y]][z] != _table[x][_table[y][z]]) {
            throw InvalidArgument("group table is not associative");
          }
        }
      }
    }
    if (_names.empty()) {
      for (int x = 0; x < n; ++x) {
        _names.push_back(x == 0 ? "1" : "h" + std::to_string(x));
      }
    }
    if (static_cast<int>(_names.size()) != n) {
      throw InvalidArgument("one name per element is required");
    }
  }

  HElement FiniteGroup::element(int id) const {
    if (id < 0 || id >= static_cast<int>(order())) {
      throw InvalidArgument("element id out of range");
    }
    return {id};
  }

  std::optional<int> FiniteGroup::id_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<int>(it - _names.begin());
  }

  HElement FiniteGroup::identity() const {
    return {0};
  }

  HElement FiniteGroup::multiply(HElement const& x, HElement const& y) const {
    return {_table.at(x.at(0)).at(y.at(0))};
  }

  HElement FiniteGroup::invert(HElement const& x) const {
    return {_inverse.at(x.at(0))};
  }

  std::vector<HElement> FiniteGroup::elements(std::size_t) const {
    std::vector<HElement> result;
    for (int x = 0; x < static_cast<int>(order()); ++x) {
      result.push_back({x});
    }
    return result;
  }

  std::string FiniteGroup::format(HElement const& x) const {
    return _names.at(x.at(0));
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string>      names;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        table[x][y] = static_cast<int>((x + y) % n);
      }
      names.push_back(x == 0   ? "1"
                      : x == 1 ? "g"
                               : "g^" + std::to_string(x));
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  FiniteGroup FiniteGroup::symmetric3() {
    using Perm = std::array<int, 3>;
    std::vector<Perm> const perms{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::string> const names{
        "()", "(01)", "(02)", "(12)", "(012)", "(021)"};
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x) {
      for (int y = 0; y < 6; ++y) {
        // (xy)(i) = y(x(i)): apply x first.
        Perm p{};
        for (int i = 0; i < 3; ++i) {
          p[i] = perms[y][perms[x][i]];
        }
        table[x][y] = static_cast<int>(
            std::find(perms.begin(), perms.end(), p) - perms.begin());
      }
    }
    return FiniteGroup(std::move(table), names);
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeGroupOracle
  ////////////////////////////////////////////////////////////////////////

  HElement FreeGroupOracle::generator(std::size_t i, bool inverse) const {
    if (i >= _rank) {
      throw InvalidArgument("free group generator out of range");
    }
    return {static_cast<int>(2 * i + (inverse ? 1 : 0))};
  }

  HElement FreeGroupOracle::multiply(HElement const& x, HElement const& y) const {
    HElement result = x;
    for (int c : y) {
      if (!result.empty() && result.back() == (c ^ 1)) {
        result.pop_back();
      } else {
        result.push_back(c);
      }
    }
    return result;
  }

  HElement FreeGroupOracle::invert(HElement const& x) const {
    HElement result(x.rbegin(), x.rend());
    for (int& c : result) {
      c ^= 1;
    }
    return result;
  }

  std::vector<HElement> FreeGroupOracle::elements(std::size_t max_length) const {
    std::vector<HElement> result{{}};
    for (std::size_t first = 0; first < result.size(); ++first) {
      if (result[first].size() == max_length) {
        continue;
      }
      for (int c = 0; c < static_cast<int>(2 * _rank); ++c) {
        if (!result[first].empty() && result[first].back() == (c ^ 1)) {
          continue;
        }
        HElement next = result[first];
        next.push_back(c);
        result.push_back(std::move(next));
      }
    }
    return result;
  }

  std::string FreeGroupOracle::format(HElement const& x) const {
    if (x.empty()) {
      return "1";
    }
    std::string result;
    for (int c : x) {
      if (!result.empty()) {
        result += ' ';
      }
      result += "x" + std::to_string(c / 2) + (c & 1 ? "^-1" : "");
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // FreeProduct
  ////////////////////////////////////////////////////////////////////////

  std::size_t fp_length(FreeProdElement const& x) noexcept {
    return x.syllables.size();
  }

  int theta_to_fgt(FreeProdElement const& x) noexcept {
    int result = 0;
    for (auto const& s : x.syllables) {
      if (s.factor == Syllable::Factor::t) {
        result += s.t_power;
      }
    }
    return result;
  }

  FreeProduct::FreeProduct(std::shared_ptr<GroupOracle const> h)
      : _h(std::move(h)) {
    if (!_h) {
      throw OracleMissing("a free product needs a factor oracle");
    }
  }

  void FreeProduct::push(std::vector<Syllable>& seq, Syllable s) const {
    if (!seq.empty() && seq.back().factor == s.factor) {
      Syllable& last = seq.back();
      if (s.factor == Syllable::Factor::t) {
        last.t_power += s.t_power;
        if (last.t_power == 0) {
          seq.pop_back();
        }
      } else {
        last.h = _h->multiply(last.h, s.h);
        if (_h->is_identity(last.h)) {
          seq.pop_back();
        }
      }
      return;
    }
    bool const trivial = s.factor == Syllable::Factor::t ? s.t_power == 0
                                                         : _h->is_identity(s.h);
    if (!trivial) {
      seq.push_back(std::move(s));
    }
  }

  FreeProdElement FreeProduct::from_h(HElement const& h) const {
    FreeProdElement result;
    push(result.syllables, Syllable{Syllable::Factor::h, h, 0});
    return result;
  }

  FreeProdElement FreeProduct::t_power(int k) const {
    FreeProdElement result;
    push(result.syllables, Syllable{Syllable::Factor::t, {}, k});
    return result;
  }

  FreeProdElement FreeProduct::conjugate(HElement const& h) const {
    return multiply(multiply(t_power(1), from_h(h)), t_power(-1));
  }

  FreeProdElement FreeProduct::multiply(FreeProdElement const& x,
                                        FreeProdElement const& y) const {
    FreeProdElement result = x;
    for (auto const& s : y.syllables) {
      push(result.syllables, s);
    }
    return result;
  }

  FreeProdElement FreeProduct::inverse(FreeProdElement const& x) const {
    FreeProdElement result;
    for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
      Syllable s = *it;
      if (s.factor == Syllable::Factor::t) {
        s.t_power = -s.t_power;
      } else {
        s.h = _h->invert(s.h);
      }
      push(result.syllables, std::move(s));
    }
    return result;
  }

  bool FreeProduct::is_reduced(FreeProdElement const& x) const {
    for (std::size_t i = 0; i < x.syllables.size(); ++i) {
      auto const& s = x.syllables[i];
      if (s.factor == Syllable::Factor::t ? s.t_power == 0
                                          : _h->is_identity(s.h)) {
        return false;
      }
      if (i > 0 && x.syllables[i - 1].factor == s.factor) {
        return false;
      }
    }
    return true;
  }

  std::string FreeProduct::format(FreeProdElement const& x) const {
    if (x.syllables.empty()) {
      return "1";
    }
    std::string result;
    for (auto const& s : x.syllables) {
      if (!result.empty()) {
        result += " . ";
      }
      if (s.factor == Syllable::Factor::t) {
        result += s.t_power == 1 ? "t" : "t^" + std::to_string(s.t_power);
      } else {
        result += "[" + _h->format(s.h) + "]";
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded searches
  ////////////////////////////////////////////////////////////////////////

  MembershipResult submonoid_member_bounded(
      FreeProduct const&                  fp,
      std::vector<FreeProdElement> const& gens,
      FreeProdElement const&              g,
      std::size_t                         max_factors,
      std::size_t                         cap) {
    MembershipResult result;
    if (g.syllables.empty()) {
      result.membership = Membership::yes;
      result.visited    = 1;
      return result;
    }
    bool const monotone = std::all_of(gens.begin(), gens.end(), [](auto const& x) {
      return theta_to_fgt(x) >= 0;
    });
    int const bound = theta_to_fgt(g);

    struct Node {
      std::size_t parent;
      std::size_t gen;
    };
    std::vector<Node>                      nodes{{0, 0}};
    std::map<FreeProdElement, std::size_t> seen{{fp.identity(), 0}};
    std::vector<std::size_t>               frontier{0};
    std::vector<FreeProdElement const*>    element{&seen.begin()->first};

    for (std::size_t depth = 0; depth < max_factors && !frontier.empty();
         ++depth) {
      std::vector<std::size_t> next;
      for (auto id : frontier) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          auto y = fp.multiply(*element[id], gens[j]);
          if (monotone && theta_to_fgt(y) > bound) {
            continue;
          }
          auto [it, inserted] = seen.emplace(std::move(y), nodes.size());
          if (!inserted) {
            continue;
          }
          nodes.push_back({id, j});
          element.push_back(&it->first);
          if (seen.size() > cap) {
            throw BudgetExceeded("submonoid search exceeds "
                                 + std::to_string(cap) + " elements");
          }
          if (it->first == g) {
            result.membership = Membership::yes;
            result.visited    = seen.size();
            for (std::size_t k = nodes.size() - 1; k != 0; k = nodes[k].parent) {
              result.factorization.push_back(nodes[k].gen + 1);
            }
            std::reverse(result.factorization.begin(),
                         result.factorization.end());
            return result;
          }
          next.push_back(nodes.size() - 1);
        }
      }
      frontier = std::move(next);
    }
    result.visited = seen.size();
    return result;
  }

  std::vector<FreeProdElement> enumerate_submonoid(
      FreeProduct const&                  fp,
      std::vector<FreeProdElement> const& gens,
      std::size_t                         max_factors,
      std::size_t                         cap) {
    std::set<FreeProdElement>    seen{fp.identity()};
    std::vector<FreeProdElement> frontier{fp.identity()};
    for (std::size_t depth = 0; depth < max_factors && !frontier.empty();
         ++depth) {
      std::vector<FreeProdElement> next;
      for (auto const& x : frontier) {
        for (auto const& gen : gens) {
          auto y = fp.multiply(x, gen);
          if (seen.insert(y).second) {
            if (seen.size() > cap) {
              throw BudgetExceeded("submonoid enumeration exceeds "
                                   + std::to_string(cap) + " elements");
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<HElement> submonoid_closure(GroupOracle const&           h,
                                          std::vector<HElement> const& w) {
    if (!h.is_finite()) {
      throw InvalidArgument("submonoid_closure requires a finite group");
    }
    std::set<HElement>    seen{h.identity()};
    std::vector<HElement> todo{h.identity()};
    while (!todo.empty()) {
      auto x = std::move(todo.back());
      todo.pop_back();
      for (auto const& y : w) {
        auto z = h.multiply(x, y);
        if (seen.insert(z).second) {
          todo.push_back(std::move(z));
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<FreeProdElement> key_claim_generators(
      FreeProduct const&           fp,
      std::vector<HElement> const& w) {
    std::vector<FreeProdElement> gens{fp.t_power(1)};
    for (auto const& h : fp.factor().elements()) {
      if (!fp.factor().is_identity(h)) {
        gens.push_back(fp.from_h(h));
      }
    }
    for (auto const& x : w) {
      gens.push_back(fp.conjugate(x));
    }
    return gens;
  }

  namespace {
    // Length of a shortest product of elements of w equal to target, by
    // breadth-first search in the finite group.
    std::optional<std::size_t> factor_distance(GroupOracle const&           h,
                                               std::vector<HElement> const& w,
                                               HElement const& target) {
      if (h.is_identity(target)) {
        return 0;
      }
      std::set<HElement>    seen{h.identity()};
      std::vector<HElement> frontier{h.identity()};
      for (std::size_t d = 1; !frontier.empty(); ++d) {
        std::vector<HElement> next;
        for (auto const& x : frontier) {
          for (auto const& y : w) {
            auto z = h.multiply(x, y);
            if (z == target) {
              return d;
            }
            if (seen.insert(z).second) {
              next.push_back(std::move(z));
            }
          }
        }
        frontier = std::move(next);
      }
      return std::nullopt;
    }
  }  // namespace

  KeyClaimReport key_claim_check(std::shared_ptr<FiniteGroup const> const& h,
                                 std::vector<HElement> const&              w,
                                 HElement const&                           target,
                                 std::size_t max_factors,
                                 std::size_t cap) {
    if (!h) {
      throw OracleMissing("key_claim_check needs a finite group");
    }
    if (max_factors + 1 < h->order()) {
      throw InvalidArgument("key_claim_check requires max_factors >= |H| - 1");
    }
    FreeProduct const fp(h);
    KeyClaimReport    report;
    auto const        closure = submonoid_closure(*h, w);
    report.h_in_t = std::find(closure.begin(), closure.end(), target)
                    != closure.end();
    if (report.h_in_t) {
      report.t_factors = factor_distance(*h, w, target).value();
    }
    auto const found = submonoid_member_bounded(
        fp, key_claim_generators(fp, w), fp.conjugate(target), max_factors, cap);
    report.in_s      = found.membership;
    report.s_factors = found.factorization.size();
    bool const yes   = found.membership == Membership::yes;
    report.agree     = report.h_in_t == yes
                   && (!yes || report.s_factors <= report.t_factors);
    return report;
  }

  IdealComplementReport ideal_complement_check(
      std::shared_ptr<FiniteGroup const> const& h,
      std::size_t                               sample_size,
      std::size_t                               max_factors,
      std::size_t                               cap) {
    if (!h) {
      throw OracleMissing("ideal_complement_check needs a finite group");
    }
    FreeProduct const     fp(h);
    IdealComplementReport report;
    auto fail = [&](std::string msg) {
      ++report.failures;
      if (report.messages.size() < 20) {
        report.messages.push_back(std::move(msg));
      }
    };

    std::vector<FreeProdElement> v_gens;
    for (auto const& x : h->elements()) {
      if (!h->is_identity(x)) {
        v_gens.push_back(fp.from_h(x));
        v_gens.push_back(fp.conjugate(x));
      }
    }
    std::vector<FreeProdElement> u_gens = v_gens;
    u_gens.insert(u_gens.begin(), fp.t_power(1));

    auto const u = enumerate_submonoid(fp, u_gens, max_factors, cap);
    auto const v = enumerate_submonoid(fp, v_gens, max_factors, cap);
    std::set<FreeProdElement> const v_set(v.begin(), v.end());
    report.u_elements = u.size();
    report.v_elements = v.size();

    for (auto const& x : v) {
      if (theta_to_fgt(x) != 0) {
        fail("element of V with nontrivial theta-image: " + fp.format(x));
      }
    }
    std::vector<FreeProdElement const*> complement;
    for (auto const& x : u) {
      if (v_set.count(x)) {
        continue;
      }
      complement.push_back(&x);
      if (theta_to_fgt(x) <= 0) {
        fail("element of U \\ V with theta-exponent <= 0: " + fp.format(x));
      }
    }
    report.complement_elements = complement.size();
    report.t_in_complement
        = std::binary_search(u.begin(), u.end(), fp.t_power(1))
          && !v_set.count(fp.t_power(1));

    if (!complement.empty()) {
      std::mt19937                               rng(20201);
      std::uniform_int_distribution<std::size_t> pick_u(0, u.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_c(0, complement.size() - 1);
      for (std::size_t i = 0; i < sample_size; ++i) {
        auto const& x   = u[pick_u(rng)];
        auto const& mid = *complement[pick_c(rng)];
        auto const& y   = u[pick_u(rng)];
        auto const  xuy = fp.multiply(fp.multiply(x, mid), y);
        ++report.spot_checks;
        if (theta_to_fgt(xuy) <= 0 || v_set.count(xuy)) {
          fail("x.u.y left U \\ V for u = " + fp.format(mid));
        }
      }
    }
    return report;
  }

}  // namespace invmon
