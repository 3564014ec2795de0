#include "tempreach/event_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

#include "tempreach/errors.hpp"

namespace tempreach {

node_id label_map::intern(const std::string& label) {
  auto [it, inserted] =
      ids_.try_emplace(label, static_cast<node_id>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<node_id> label_map::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct raw_line {
  std::size_t line_no;
  std::string u, v;
  double t;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  const bool commas = line.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end;
    if (commas) {
      end = line.find(',', pos);
    } else {
      pos = line.find_first_not_of(" \t", pos);
      if (pos == std::string_view::npos) break;
      end = line.find_first_of(" \t", pos);
    }
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(trim(line.substr(pos, end - pos)));
    pos = end + 1;
  }
  return fields;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool is_negative_integer(std::string_view s) {
  return s.size() > 1 && s[0] == '-' && parse_uint(s.substr(1)).has_value();
}

}  // namespace

loaded_network read_events(std::istream& in, const load_options& opts) {
  if (!(opts.prefix_fraction > 0.0 && opts.prefix_fraction <= 1.0))
    throw data_error("prefix fraction must lie in (0, 1]");

  std::vector<raw_line> lines;
  bool numeric = true;
  std::string buf;
  std::size_t line_no = 0;
  while (std::getline(in, buf)) {
    ++line_no;
    const auto body = trim(buf);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    if (fields.size() < 3 || fields[0].empty() || fields[1].empty())
      throw parse_error(line_no, "expected u,v,t");
    for (std::size_t k = 0; k < 2; ++k) {
      if (is_negative_integer(fields[k]))
        throw parse_error(line_no, "negative node id");
      if (numeric && !parse_uint(fields[k])) numeric = false;
    }
    double t = 0.0;
    const auto ts = fields[2];
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ec != std::errc{} || ptr != ts.data() + ts.size() || !std::isfinite(t))
      throw parse_error(line_no, "bad timestamp '" + std::string(ts) + "'");
    lines.push_back({line_no, std::string(fields[0]), std::string(fields[1]), t});
  }

  if (opts.sort) {
    std::stable_sort(lines.begin(), lines.end(),
                     [](const raw_line& a, const raw_line& b) { return a.t < b.t; });
  } else {
    for (std::size_t i = 1; i < lines.size(); ++i)
      if (lines[i].t < lines[i - 1].t)
        throw parse_error(lines[i].line_no, "out of order");
  }

  loaded_network out;
  std::vector<event> events;
  events.reserve(lines.size());
  std::size_t n = 0;
  if (numeric) {
    for (const auto& l : lines) {
      const auto u = *parse_uint(l.u);
      const auto v = *parse_uint(l.v);
      if (std::max(u, v) >= std::numeric_limits<node_id>::max())
        throw parse_error(l.line_no, "node id too large");
      events.push_back({static_cast<node_id>(u), static_cast<node_id>(v), l.t});
      n = std::max<std::size_t>(n, std::max(u, v) + 1);
    }
  } else {
    label_map labels;
    for (const auto& l : lines)
      events.push_back({labels.intern(l.u), labels.intern(l.v), l.t});
    n = labels.size();
    out.labels = std::move(labels);
  }

  if (opts.prefix_fraction < 1.0) {
    const auto keep = static_cast<std::size_t>(
        std::llround(opts.prefix_fraction * static_cast<double>(events.size())));
    events.resize(std::min(keep, events.size()));
  }
  out.net = temporal_network(n, std::move(events));
  return out;
}

loaded_network load_events(const std::filesystem::path& path,
                           const load_options& opts) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open " + path.string());
  return read_events(in, opts);
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_events(std::ostream& out, const temporal_network& net) {
  for (const auto& e : net.events())
    out << e.u << ',' << e.v << ',' << format_double(e.t) << '\n';
}

void save_events(const std::filesystem::path& path, const temporal_network& net) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write " + path.string());
  write_events(out, net);
}

}  // namespace tempreach
