#include "vlh/moves.hpp"

#include <algorithm>
#include <map>

#include "vlh/error.hpp"

namespace vlh {

namespace {

using Components = std::vector<std::vector<Passage>>;

void check_site(const VirtualLinkDiagram& d, Site site) {
  const auto& comps = d.components();
  if (site.component < 0 || site.component >= static_cast<int>(comps.size()) || site.position < 0 ||
      site.position > static_cast<int>(comps[static_cast<std::size_t>(site.component)].size())) {
    throw Error(ErrorKind::invalid_site,
                "no site " + std::to_string(site.component) + ":" + std::to_string(site.position),
                std::to_string(site.component) + ":" + std::to_string(site.position));
  }
}

struct Location {
  int component, position;
};

// Over and under locations of every label, indexed by label - 1.
std::vector<std::pair<Location, Location>> locate(const VirtualLinkDiagram& d) {
  std::vector<std::pair<Location, Location>> out(static_cast<std::size_t>(d.crossing_count()));
  const auto& comps = d.components();
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const auto& comp = comps[static_cast<std::size_t>(c)];
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) {
      const Passage& p = comp[static_cast<std::size_t>(i)];
      auto& slot = out[static_cast<std::size_t>(p.crossing - 1)];
      (p.over ? slot.first : slot.second) = {c, i};
    }
  }
  return out;
}

bool cyclically_adjacent(const VirtualLinkDiagram& d, Location x, Location y) {
  if (x.component != y.component) return false;
  const int len = static_cast<int>(d.components()[static_cast<std::size_t>(x.component)].size());
  return (x.position + 1) % len == y.position || (y.position + 1) % len == x.position;
}

VirtualLinkDiagram remove_labels(const VirtualLinkDiagram& d, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  Components comps;
  for (const auto& comp : d.components()) {
    std::vector<Passage> kept;
    for (Passage p : comp) {
      if (std::binary_search(labels.begin(), labels.end(), p.crossing)) continue;
      p.crossing -= static_cast<int>(std::lower_bound(labels.begin(), labels.end(), p.crossing) - labels.begin());
      kept.push_back(p);
    }
    comps.push_back(std::move(kept));
  }
  return VirtualLinkDiagram(std::move(comps), d.name());
}

[[noreturn]] void not_found(const std::string& what, const std::string& subject) {
  throw Error(ErrorKind::pattern_not_found, what, subject);
}

}  // namespace

VirtualLinkDiagram apply_r1(const VirtualLinkDiagram& d, Site site, KinkVariant variant) {
  check_site(d, site);
  const int label = d.crossing_count() + 1;
  const int sign = variant.sign >= 0 ? 1 : -1;
  Components comps = d.components();
  auto& comp = comps[static_cast<std::size_t>(site.component)];
  const Passage first{label, variant.over_first, sign};
  const Passage second{label, !variant.over_first, sign};
  comp.insert(comp.begin() + site.position, {first, second});
  return VirtualLinkDiagram(std::move(comps), d.name());
}

VirtualLinkDiagram apply_r2(const VirtualLinkDiagram& d, Site over_site, Site under_site,
                            BigonVariant variant) {
  check_site(d, over_site);
  check_site(d, under_site);
  if (over_site.component == under_site.component && over_site.position == under_site.position) {
    throw Error(ErrorKind::invalid_site, "the two strands of a bigon need distinct sites",
                std::to_string(over_site.component) + ":" + std::to_string(over_site.position));
  }
  const int a = d.crossing_count() + 1;
  const int b = a + 1;
  const int s = variant.sign >= 0 ? 1 : -1;
  Components comps = d.components();
  std::vector<Passage> overs{{a, true, s}, {b, true, -s}};
  std::vector<Passage> unders{{a, false, s}, {b, false, -s}};
  if (!variant.same_order) std::swap(unders[0], unders[1]);

  // Insert at the later site first so the earlier position stays valid.
  auto insert = [&](Site site, const std::vector<Passage>& ps) {
    auto& comp = comps[static_cast<std::size_t>(site.component)];
    comp.insert(comp.begin() + site.position, ps.begin(), ps.end());
  };
  const bool over_later = over_site.component == under_site.component &&
                          over_site.position > under_site.position;
  if (over_later) {
    insert(over_site, overs);
    insert(under_site, unders);
  } else {
    insert(under_site, unders);
    insert(over_site, overs);
  }
  return VirtualLinkDiagram(std::move(comps), d.name());
}

VirtualLinkDiagram inverse_r1(const VirtualLinkDiagram& d, int label) {
  if (label < 1 || label > d.crossing_count()) not_found("no crossing " + std::to_string(label), std::to_string(label));
  const auto [over, under] = locate(d)[static_cast<std::size_t>(label - 1)];
  if (!cyclically_adjacent(d, over, under)) {
    not_found("crossing " + std::to_string(label) + " is not a kink", std::to_string(label));
  }
  return remove_labels(d, {label});
}

VirtualLinkDiagram inverse_r2(const VirtualLinkDiagram& d, int a, int b) {
  const std::string subject = std::to_string(a) + "," + std::to_string(b);
  const int n = d.crossing_count();
  if (a < 1 || b < 1 || a > n || b > n || a == b) not_found("no crossing pair " + subject, subject);
  if (d.sign(a) == d.sign(b)) not_found("crossings " + subject + " have equal signs", subject);
  const auto where = locate(d);
  const auto& [over_a, under_a] = where[static_cast<std::size_t>(a - 1)];
  const auto& [over_b, under_b] = where[static_cast<std::size_t>(b - 1)];
  if (!cyclically_adjacent(d, over_a, over_b) || !cyclically_adjacent(d, under_a, under_b)) {
    not_found("crossings " + subject + " do not bound a bigon", subject);
  }
  return remove_labels(d, {a, b});
}

std::vector<int> r1_candidates(const VirtualLinkDiagram& d) {
  std::vector<int> out;
  const auto where = locate(d);
  for (int label = 1; label <= d.crossing_count(); ++label) {
    const auto& [over, under] = where[static_cast<std::size_t>(label - 1)];
    if (cyclically_adjacent(d, over, under)) out.push_back(label);
  }
  return out;
}

std::vector<std::pair<int, int>> r2_candidates(const VirtualLinkDiagram& d) {
  std::vector<std::pair<int, int>> out;
  const auto where = locate(d);
  const int n = d.crossing_count();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (d.sign(a) == d.sign(b)) continue;
      const auto& [over_a, under_a] = where[static_cast<std::size_t>(a - 1)];
      const auto& [over_b, under_b] = where[static_cast<std::size_t>(b - 1)];
      if (cyclically_adjacent(d, over_a, over_b) && cyclically_adjacent(d, under_a, under_b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

namespace {

Site random_site(const VirtualLinkDiagram& d, std::mt19937_64& rng) {
  // Every gap of every component is equally likely; an empty component has one.
  std::vector<Site> sites;
  const auto& comps = d.components();
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    const int len = static_cast<int>(comps[static_cast<std::size_t>(c)].size());
    for (int p = 0; p < std::max(len, 1); ++p) sites.push_back({c, p});
  }
  return sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
}

std::string site_text(Site s) { return std::to_string(s.component) + ":" + std::to_string(s.position); }

}  // namespace

RandomMove random_move(const VirtualLinkDiagram& d, std::mt19937_64& rng, int max_crossings) {
  const int n = d.crossing_count();
  const auto kinks = r1_candidates(d);
  const auto bigons = r2_candidates(d);
  enum Kind { r1, r2, r1_inverse, r2_inverse };
  std::vector<Kind> kinds;
  if (!kinks.empty()) kinds.push_back(r1_inverse);
  if (!bigons.empty()) kinds.push_back(r2_inverse);
  if (n + 1 <= max_crossings || kinds.empty()) kinds.push_back(r1);
  if (n + 2 <= max_crossings) kinds.push_back(r2);

  auto pick = [&](std::size_t count) { return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng); };
  auto coin = [&]() { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; };

  switch (kinds[pick(kinds.size())]) {
    case r1: {
      const Site site = random_site(d, rng);
      const KinkVariant v{coin(), coin() ? 1 : -1};
      return {apply_r1(d, site, v), "R1 at " + site_text(site) + (v.over_first ? " over-first" : " under-first") +
                                        (v.sign > 0 ? " +" : " -")};
    }
    case r2: {
      Site over = random_site(d, rng);
      Site under = random_site(d, rng);
      if (over.component == under.component && over.position == under.position) {
        // Same gap: put the under strand just after the first passage when
        // there is one, otherwise fall back to a kink.
        const auto len = static_cast<int>(d.components()[static_cast<std::size_t>(over.component)].size());
        if (len == 0) {
          const KinkVariant v{coin(), coin() ? 1 : -1};
          return {apply_r1(d, over, v), "R1 at " + site_text(over) + (v.over_first ? " over-first" : " under-first") +
                                            (v.sign > 0 ? " +" : " -")};
        }
        under.position = (over.position + 1) % (len + 1);
      }
      const BigonVariant v{coin() ? 1 : -1, coin()};
      return {apply_r2(d, over, under, v), "R2 over " + site_text(over) + " under " + site_text(under) +
                                               (v.sign > 0 ? " +" : " -") + (v.same_order ? " parallel" : " antiparallel")};
    }
    case r1_inverse: {
      const int label = kinks[pick(kinks.size())];
      return {inverse_r1(d, label), "R1^-1 at " + std::to_string(label)};
    }
    case r2_inverse: {
      const auto [a, b] = bigons[pick(bigons.size())];
      return {inverse_r2(d, a, b), "R2^-1 at " + std::to_string(a) + "," + std::to_string(b)};
    }
  }
  return {d, "none"};
}

}  // namespace vlh
