#include "shiftca/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "shiftca/error.hpp"

namespace shiftca {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string &what) { throw Error(ErrorKind::MalformedInput, what); }

const json &field(const json &obj, const char *key)
{
	auto it = obj.find(key);
	if (it == obj.end())
		malformed(std::string("missing field \"") + key + "\"");
	return *it;
}

long long integer(const json &v, const std::string &where)
{
	if (!v.is_number_integer())
		malformed(where + " must be an integer");
	return v.get<long long>();
}

std::string text(const json &v, const std::string &where)
{
	if (!v.is_string())
		malformed(where + " must be a string");
	return v.get<std::string>();
}

const json &array(const json &v, const std::string &where)
{
	if (!v.is_array())
		malformed(where + " must be an array");
	return v;
}

void only_fields(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
	for (const auto &[key, value] : obj.items())
		if (!allowed.contains(key))
			malformed("unexpected field \"" + key + "\" in " + where);
}

} // namespace

RawPresentation parse_shiftspace(const json &doc)
{
	if (!doc.is_object())
		malformed("document must be a JSON object");
	if (text(field(doc, "format"), "format") != "shiftspace-v1")
		malformed("format must be \"shiftspace-v1\"");

	RawPresentation raw;
	raw.kind = text(field(doc, "kind"), "kind");
	for (const json &s : array(field(doc, "alphabet"), "alphabet"))
		raw.alphabet.push_back(text(s, "alphabet entry"));

	if (raw.kind == "sft") {
		only_fields(doc, {"format", "kind", "alphabet", "matrix"}, "an sft document");
		for (const json &row : array(field(doc, "matrix"), "matrix")) {
			auto &out = raw.matrix.emplace_back();
			for (const json &x : array(row, "matrix row"))
				out.push_back(integer(x, "matrix entry"));
		}
	} else if (raw.kind == "forbidden_words") {
		only_fields(doc, {"format", "kind", "alphabet", "forbidden"}, "a forbidden_words document");
		for (const json &w : array(field(doc, "forbidden"), "forbidden"))
			raw.forbidden.push_back(text(w, "forbidden word"));
	} else if (raw.kind == "labeled_graph") {
		only_fields(doc, {"format", "kind", "alphabet", "vertices", "edges"}, "a labeled_graph document");
		raw.vertices = integer(field(doc, "vertices"), "vertices");
		for (const json &e : array(field(doc, "edges"), "edges")) {
			if (!e.is_object())
				malformed("edge must be an object");
			only_fields(e, {"from", "to", "label"}, "an edge");
			raw.edges.push_back({integer(field(e, "from"), "edge from"), integer(field(e, "to"), "edge to"),
			                     text(field(e, "label"), "edge label")});
		}
	} else {
		malformed("unknown kind \"" + raw.kind + "\"");
	}
	return raw;
}

Presentation load_presentation(const std::filesystem::path &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		malformed("cannot read " + path.string());
	std::ostringstream buf;
	buf << in.rdbuf();
	json doc = json::parse(buf.str(), nullptr, false);
	if (doc.is_discarded())
		malformed(path.string() + " is not valid JSON");
	return validate(parse_shiftspace(doc));
}

json canonical_json(const Presentation &p)
{
	json doc;
	doc["format"] = "shiftspace-v1";
	doc["kind"] = std::string(p.kind_name());
	doc["alphabet"] = p.alphabet().symbols();
	std::visit(
	    [&](const auto &k) {
		    using T = std::decay_t<decltype(k)>;
		    if constexpr (std::is_same_v<T, SftMatrix>) {
			    doc["matrix"] = k.entries;
		    } else if constexpr (std::is_same_v<T, ForbiddenWords>) {
			    json words = json::array();
			    for (const Word &w : k.words)
				    words.push_back(p.alphabet().format(w));
			    doc["forbidden"] = words;
		    } else {
			    doc["vertices"] = k.vertex_count;
			    std::vector<Edge> sorted = k.edges;
			    std::sort(sorted.begin(), sorted.end());
			    json edges = json::array();
			    for (const Edge &e : sorted)
				    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", p.alphabet().name(e.label)}});
			    doc["edges"] = edges;
		    }
	    },
	    p.kind());
	return doc;
}

} // namespace shiftca
