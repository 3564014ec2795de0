#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempreach/temporal_network.hpp"

namespace tempreach {

// Dense relabeling of string node ids, in order of first appearance.
class label_map {
 public:
  node_id intern(const std::string& label);
  const std::string& label(node_id id) const { return labels_.at(id); }
  std::optional<node_id> find(const std::string& label) const;
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::unordered_map<std::string, node_id> ids_;
  std::vector<std::string> labels_;
};

struct load_options {
  // Stable sort by timestamp; otherwise out-of-order input is an error.
  bool sort = false;
  // Keep the chronologically first round(fraction * m) events. The node count
  // is still taken from the whole file.
  double prefix_fraction = 1.0;
};

struct loaded_network {
  temporal_network net;
  // Set when the file used non-numeric node labels.
  std::optional<label_map> labels;
};

// Reads `u,v,t` lines (comma or whitespace separated; extra columns ignored;
// blank lines and `#` comments skipped). Integer ids are used as-is, so
// n = 1 + max id. If any id is not an integer, all ids are relabeled densely.
loaded_network read_events(std::istream& in, const load_options& opts = {});
loaded_network load_events(const std::filesystem::path& path,
                           const load_options& opts = {});

// One `u,v,t` line per event, timestamps in shortest round-trip form.
void write_events(std::ostream& out, const temporal_network& net);
void save_events(const std::filesystem::path& path, const temporal_network& net);

// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace tempreach
