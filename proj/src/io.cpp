#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rainbow {

std::string coloring_to_string(const ColoredGraph& g) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"" << kColoringFormat << "\",\n";
    out << "  \"n\": " << g.vertex_count() << ",\n";
    out << "  \"colors\": [\n";
    std::vector<EdgeColor> edges = g.edges_sorted();
    for (size_t i = 0; i < edges.size(); ++i) {
        out << "    [" << edges[i].u << ", " << edges[i].v << ", " << edges[i].c << "]";
        if (i + 1 < edges.size()) out << ",";
        out << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

ColoredGraph coloring_from_string(const std::string& text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(Errc::parse_error, source + ": " + e.what());
    }
    if (!doc.is_object()) raise(Errc::parse_error, source + ": top level is not an object");
    if (!doc.contains("format") || !doc["format"].is_string() ||
        doc["format"].get<std::string>() != kColoringFormat)
        raise(Errc::parse_error, source + ": field 'format' must be \"" +
                                     std::string(kColoringFormat) + "\"");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        raise(Errc::parse_error, source + ": field 'n' must be an integer");
    long long n = doc["n"].get<long long>();
    if (n < 2 || n > ColoredGraph::kMaxVertices)
        raise(Errc::parse_error, source + ": n out of range: " + std::to_string(n));
    if (!doc.contains("colors") || !doc["colors"].is_array())
        raise(Errc::parse_error, source + ": field 'colors' must be an array");

    const auto& arr = doc["colors"];
    size_t expected = static_cast<size_t>(n) * (n - 1) / 2;
    if (arr.size() != expected)
        raise(Errc::parse_error, source + ": 'colors' has " + std::to_string(arr.size()) +
                                     " records, expected " + std::to_string(expected));

    std::vector<EdgeColor> edges;
    edges.reserve(expected);
    std::pair<long long, long long> prev{-1, -1};
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& rec = arr[i];
        std::string at = source + ": colors[" + std::to_string(i) + "]";
        if (!rec.is_array() || rec.size() != 3 || !rec[0].is_number_integer() ||
            !rec[1].is_number_integer() || !rec[2].is_number_integer())
            raise(Errc::parse_error, at + " must be [u, v, c] with integer entries");
        long long u = rec[0].get<long long>();
        long long v = rec[1].get<long long>();
        long long c = rec[2].get<long long>();
        if (u < 0 || v < 0 || u >= n || v >= n)
            raise(Errc::parse_error, at + ": vertex out of range");
        if (u >= v) raise(Errc::parse_error, at + ": records need u < v");
        if (c < 0 || c > 0xffff) raise(Errc::parse_error, at + ": color out of range");
        std::pair<long long, long long> cur{u, v};
        if (!(prev < cur)) raise(Errc::parse_error, at + ": records out of order");
        prev = cur;
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
    }
    return ColoredGraph::build(static_cast<int>(n), edges);
}

void write_coloring(const ColoredGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::parse_error, "cannot open " + path.string() + " for writing");
    out << coloring_to_string(g);
    if (!out) raise(Errc::parse_error, "write failed: " + path.string());
}

ColoredGraph read_coloring(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::parse_error, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return coloring_from_string(buf.str(), path.string());
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::parse_error, "cannot open " + path.string());
    uint64_t h = 0xcbf29ce484222325ull;
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(chunk[i]);
            h *= 0x100000001b3ull;
        }
        if (!in) break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace rainbow
