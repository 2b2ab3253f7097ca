#include "limattn/census.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

namespace limattn {

namespace {

void require_census_size(int n) {
  if (n < kMinItems || n > kMaxCensusItems) {
    throw Error(ErrorCode::SizeTooLarge,
                "census needs 2 <= n <= " + std::to_string(kMaxCensusItems) +
                    ", got " + std::to_string(n));
  }
}

// Menus of size >= 2 in ascending encoding.
std::vector<ItemSet> digit_menus(int n) {
  std::vector<ItemSet> out;
  for_each_menu(n, [&](ItemSet a) {
    if (a.size() >= 2) out.push_back(a);
  });
  return out;
}

Item nth_member(ItemSet s, int k) {
  for (Item x : s) {
    if (k-- == 0) return x;
  }
  return -1;
}

}  // namespace

GroundSet census_ground(int n) {
  require_census_size(n);
  return GroundSet::letters(std::string_view("vwxyz").substr(5 - n));
}

std::uint64_t choice_function_count(int n) {
  require_census_size(n);
  std::uint64_t count = 1;
  for (ItemSet a : digit_menus(n)) count *= static_cast<std::uint64_t>(a.size());
  return count;
}

ChoiceFunction choice_function_at(const GroundSet& ground, std::uint64_t index) {
  const int n = ground.size();
  require_census_size(n);
  if (index >= choice_function_count(n)) {
    throw Error(ErrorCode::InvalidArgument, "choice function index out of range");
  }
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  for (Item x = 0; x < n; ++x) table[Mask{1} << x] = static_cast<std::int8_t>(x);
  for (ItemSet a : digit_menus(n)) {
    const auto radix = static_cast<std::uint64_t>(a.size());
    table[a.bits()] = static_cast<std::int8_t>(nth_member(a, static_cast<int>(index % radix)));
    index /= radix;
  }
  return ChoiceFunction(ground, std::move(table));
}

void for_each_choice_function(const GroundSet& ground, std::uint64_t begin,
                              std::uint64_t end,
                              const std::function<void(const ChoiceFunction&)>& f) {
  if (begin >= end) return;
  const int n = ground.size();
  const auto menus = digit_menus(n);
  std::vector<int> digit(menus.size());
  {
    std::uint64_t rest = begin;
    for (std::size_t i = 0; i < menus.size(); ++i) {
      const auto radix = static_cast<std::uint64_t>(menus[i].size());
      digit[i] = static_cast<int>(rest % radix);
      rest /= radix;
    }
  }
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  for (Item x = 0; x < n; ++x) table[Mask{1} << x] = static_cast<std::int8_t>(x);
  for (std::size_t i = 0; i < menus.size(); ++i) {
    table[menus[i].bits()] = static_cast<std::int8_t>(nth_member(menus[i], digit[i]));
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    f(ChoiceFunction(ground, table));
    // Odometer step.
    for (std::size_t i = 0; i < menus.size(); ++i) {
      if (++digit[i] < menus[i].size()) {
        table[menus[i].bits()] = static_cast<std::int8_t>(nth_member(menus[i], digit[i]));
        break;
      }
      digit[i] = 0;
      table[menus[i].bits()] = static_cast<std::int8_t>(menus[i].first());
    }
  }
}

std::vector<ChoiceFunction> enumerate_choice_functions(int n) {
  const GroundSet ground = census_ground(n);
  std::vector<ChoiceFunction> out;
  out.reserve(choice_function_count(n));
  for_each_choice_function(ground, 0, choice_function_count(n),
                           [&](const ChoiceFunction& c) { out.push_back(c); });
  return out;
}

const char* to_string(Region region) {
  switch (region) {
    case Region::None: return "cla-only";
    case Region::ColaOnly: return "cola-only";
    case Region::CslaOnly: return "csla-only";
    case Region::CclaOnly: return "ccla-only";
    case Region::ColaCsla: return "cola+csla";
    case Region::ColaCcla: return "cola+ccla";
    case Region::CslaCcla: return "csla+ccla";
    case Region::AllNotRat: return "cola+csla+ccla-not-rat";
    case Region::Rat: return "rat";
  }
  return "?";
}

Region region_of(const ClassFlags& f) {
  const int key = (f.cola ? 1 : 0) | (f.csla ? 2 : 0) | (f.ccla ? 4 : 0);
  switch (key) {
    case 0: return Region::None;
    case 1: return Region::ColaOnly;
    case 2: return Region::CslaOnly;
    case 4: return Region::CclaOnly;
    case 3: return Region::ColaCsla;
    case 5: return Region::ColaCcla;
    case 6: return Region::CslaCcla;
    default: return f.rat ? Region::Rat : Region::AllNotRat;
  }
}

bool CensusReport::same_counts(const CensusReport& o) const {
  return n == o.n && total == o.total && rat == o.rat && cla == o.cla && cola == o.cola &&
         csla == o.csla && cssla == o.cssla && ccla == o.ccla && pilc == o.pilc &&
         regions == o.regions;
}

bool CensusReport::consistent() const {
  std::uint64_t sum = 0;
  for (auto r : regions) sum += r;
  bool ok = sum == cla && cla <= total;
  for (auto count : {cola, csla, cssla, ccla, pilc}) ok = ok && rat <= count && count <= cla;
  return ok;
}

namespace {

void tally(CensusReport& r, const ClassFlags& f) {
  ++r.total;
  r.rat += f.rat;
  r.cla += f.cla;
  r.cola += f.cola;
  r.csla += f.csla;
  r.cssla += f.cssla;
  r.ccla += f.ccla;
  r.pilc += f.pilc;
  if (f.cla) ++r.regions[static_cast<int>(region_of(f))];
}

void merge(CensusReport& into, const CensusReport& part) {
  into.total += part.total;
  into.rat += part.rat;
  into.cla += part.cla;
  into.cola += part.cola;
  into.csla += part.csla;
  into.cssla += part.cssla;
  into.ccla += part.ccla;
  into.pilc += part.pilc;
  for (int i = 0; i < kRegionCount; ++i) into.regions[i] += part.regions[i];
}

}  // namespace

CensusReport run_census(int n, int workers) {
  require_census_size(n);
  if (workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const GroundSet ground = census_ground(n);
  const std::uint64_t count = choice_function_count(n);
  std::vector<CensusReport> parts(workers);
  auto work = [&](int w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    for_each_choice_function(ground, begin, end, [&](const ChoiceFunction& c) {
      tally(parts[w], classify_flags(c));
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  CensusReport report;
  report.n = n;
  report.workers = workers;
  for (const auto& part : parts) merge(report, part);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string format_census(const CensusReport& r) {
  std::string out;
  auto line = [&](const std::string& key, const std::string& value) {
    out += key + ": " + value + '\n';
  };
  line("n", std::to_string(r.n));
  line("total", std::to_string(r.total));
  line("rat", std::to_string(r.rat));
  line("cla", std::to_string(r.cla));
  line("cola", std::to_string(r.cola));
  line("csla", std::to_string(r.csla));
  line("cssla", std::to_string(r.cssla));
  line("ccla", std::to_string(r.ccla));
  line("pilc", std::to_string(r.pilc));
  for (int i = 0; i < kRegionCount; ++i) {
    line(std::string("region ") + to_string(static_cast<Region>(i)),
         std::to_string(r.regions[i]));
  }
  if (r.n == 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(r.cla) / 24.0);
    line("cla/24 (exploratory)", buf);
  }
  line("consistent", r.consistent() ? "yes" : "no");
  line("workers", std::to_string(r.workers));
  char secs[64];
  std::snprintf(secs, sizeof secs, "%.3f", r.elapsed_seconds);
  line("elapsed-seconds", secs);
  return out;
}

}  // namespace limattn
