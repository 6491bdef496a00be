#ifndef MUIG_IO_HPP
#define MUIG_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "muig/graph.hpp"
#include "muig/interval.hpp"
#include "muig/model.hpp"

namespace muig {

// .muir text: one `<vertex-id> <kind> <left>` per line, '#' comments, blank
// lines ignored. Throws ParseError on malformed lines, on duplicate ids and on
// input without any interval.
Representation parse_muir(std::string_view text);
std::string write_muir(const Representation& rep);

// {"columns":[[{"pp":[..],"pm":[..],"mp":[..],"mm":[..]}, ...], ...]}.
// Row index is the 1-based position within the column array; columns are
// written with their true height (no padding). Missing quadrant keys read as empty.
nlohmann::json model_to_json(const UBubbleModel& model);
UBubbleModel model_from_json(const nlohmann::json& doc);

nlohmann::json graph_to_json(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace muig

#endif // MUIG_IO_HPP
