#include "rcpoly/restraint.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rcp {

namespace {

std::vector<int> normalized_set(std::vector<int> colours) {
  std::sort(colours.begin(), colours.end());
  colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  if (!colours.empty() && colours.front() < 1)
    throw std::invalid_argument("restraint colours must be >= 1");
  return colours;
}

}  // namespace

Restraint::Restraint(std::vector<std::vector<int>> sets) : forbid(std::move(sets)) {
  for (auto& s : forbid) s = normalized_set(std::move(s));
}

Restraint Restraint::empty(int n) {
  Restraint r;
  r.forbid.assign(n, {});
  return r;
}

int Restraint::max_colour() const {
  int m = 0;
  for (const auto& s : forbid)
    if (!s.empty()) m = std::max(m, s.back());
  return m;
}

bool Restraint::is_standard(int m) const {
  for (const auto& s : forbid)
    if (static_cast<int>(s.size()) != m) return false;
  return true;
}

bool Restraint::is_m_restraint(int m) const {
  for (const auto& s : forbid)
    if (static_cast<int>(s.size()) > m) return false;
  return true;
}

bool is_valid_rgs(const Rgs& a) {
  if (a.empty()) return false;
  if (a[0] != 0) return false;
  int mx = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] > mx + 1) return false;
    mx = std::max(mx, a[i]);
  }
  return true;
}

Restraint restraint_from_rgs(const Rgs& a) {
  if (!is_valid_rgs(a)) throw std::invalid_argument("invalid restricted growth string");
  Restraint r;
  r.forbid.reserve(a.size());
  for (int v : a) r.forbid.push_back({v + 1});
  return r;
}

Rgs rgs_of_simple_restraint(const Restraint& r) {
  if (r.size() == 0 || !r.is_standard(1))
    throw std::invalid_argument("not a standard simple restraint");
  std::map<int, int> id;
  Rgs a;
  a.reserve(r.forbid.size());
  for (const auto& s : r.forbid) {
    auto [it, fresh] = id.emplace(s[0], static_cast<int>(id.size()));
    (void)fresh;
    a.push_back(it->second);
  }
  return a;
}

bool next_rgs(Rgs& a) {
  int n = static_cast<int>(a.size());
  std::vector<int> prefix_max(n, 0);
  for (int i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], a[i - 1]);
  for (int i = n - 1; i >= 1; --i) {
    if (a[i] <= prefix_max[i]) {
      ++a[i];
      std::fill(a.begin() + i + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

std::vector<Rgs> all_rgs(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  std::vector<Rgs> out;
  Rgs a(n, 0);
  do {
    out.push_back(a);
  } while (next_rgs(a));
  return out;
}

mpz_class bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: negative n");
  // Bell triangle.
  std::vector<mpz_class> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<mpz_class> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

Restraint alternating_restraint(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw std::invalid_argument("alternating restraint needs a bipartite graph");
  Restraint r = Restraint::empty(g.n);
  for (int v : parts->first) r.forbid[v] = {1};
  for (int v : parts->second) r.forbid[v] = {2};
  return r;
}

Restraint restrict_restraint(const Restraint& r, const std::vector<int>& original_ids) {
  Restraint out;
  out.forbid.reserve(original_ids.size());
  for (int old : original_ids) {
    if (old < 0 || old >= r.size())
      throw std::invalid_argument("restrict: vertex out of range");
    out.forbid.push_back(r.forbid[old]);
  }
  return out;
}

Restraint merge_for_contraction(const Restraint& r, const std::vector<int>& merge_map) {
  if (static_cast<int>(merge_map.size()) != r.size())
    throw std::invalid_argument("merge_for_contraction: size mismatch");
  int new_n = r.size() - 1;
  Restraint out = Restraint::empty(new_n);
  for (int old = 0; old < r.size(); ++old) {
    int tgt = merge_map[old];
    if (tgt < 0 || tgt >= new_n)
      throw std::invalid_argument("merge_for_contraction: bad merge map");
    std::vector<int> merged(out.forbid[tgt]);
    merged.insert(merged.end(), r.forbid[old].begin(), r.forbid[old].end());
    out.forbid[tgt] = normalized_set(std::move(merged));
  }
  return out;
}

Restraint lists_to_restraint(const std::vector<std::vector<int>>& lists, int k) {
  if (k < 0) throw std::invalid_argument("lists_to_restraint: negative k");
  Restraint out;
  out.forbid.reserve(lists.size());
  for (const auto& list : lists) {
    std::vector<int> avail = normalized_set(list);
    if (!avail.empty() && avail.back() > k)
      throw std::invalid_argument("list colour exceeds k");
    std::vector<int> complement;
    auto it = avail.begin();
    for (int c = 1; c <= k; ++c) {
      if (it != avail.end() && *it == c)
        ++it;
      else
        complement.push_back(c);
    }
    out.forbid.push_back(std::move(complement));
  }
  return out;
}

Restraint parse_restraint(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::size_t pos = 0;
  for (;;) {
    std::size_t semi = text.find(';', pos);
    std::string field = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
    std::vector<int> colours;
    if (!field.empty()) {
      std::size_t fpos = 0;
      for (;;) {
        std::size_t comma = field.find(',', fpos);
        std::string tok =
            field.substr(fpos, comma == std::string::npos ? comma : comma - fpos);
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
          throw std::invalid_argument("restraint syntax: empty colour in \"" + field + "\"");
        tok = tok.substr(b, e - b + 1);
        if (tok.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("restraint syntax: bad colour \"" + tok + "\"");
        long value = std::stol(tok);
        if (value < 1) throw std::invalid_argument("restraint colours must be >= 1");
        colours.push_back(static_cast<int>(value));
        if (comma == std::string::npos) break;
        fpos = comma + 1;
      }
    }
    sets.push_back(std::move(colours));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return Restraint(std::move(sets));
}

std::string format_restraint(const Restraint& r) {
  std::string out;
  for (int v = 0; v < r.size(); ++v) {
    if (v) out += ';';
    for (std::size_t i = 0; i < r.forbid[v].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(r.forbid[v][i]);
    }
  }
  return out;
}

}  // namespace rcp
