#include "cvpg/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace cvpg {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Content lines, trimmed, without blanks and comments.
std::vector<std::string> content_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.emplace_back(t);
    }
    return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: too many vertices");
    }
    int acc = 0, bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(std::string_view text) {
    auto s = trim(text);
    if (s.rfind(">>graph6<<", 0) == 0) s.remove_prefix(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    std::size_t p = 0;
    int n = s[p++] - 63;
    if (n == 63) {
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
        if (s[1] == 126) throw std::invalid_argument("graph6: graphs this large are not supported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | (s[p++] - 63);
    }
    const std::size_t pairs = idx(n) * idx(n > 0 ? n - 1 : 0) / 2;
    if (s.size() - p != (pairs + 5) / 6) throw std::invalid_argument("graph6: wrong length for " + std::to_string(n) + " vertices");
    GraphBuilder b(n);
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int byte = s[p + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    return b.build();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("edge list: missing header");
    auto ints = [](const std::string& line) {
        std::istringstream in(line);
        std::vector<long long> v;
        long long x;
        while (in >> x) v.push_back(x);
        if (!in.eof()) throw std::invalid_argument("edge list: bad token in line '" + line + "'");
        return v;
    };
    auto head = ints(lines[0]);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0) throw std::invalid_argument("edge list: header must be 'n m'");
    const auto n = static_cast<int>(head[0]);
    if (lines.size() - 1 != static_cast<std::size_t>(head[1]))
        throw std::invalid_argument("edge list: header says " + std::to_string(head[1]) + " edges, found " +
                                    std::to_string(lines.size() - 1));
    GraphBuilder b(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto e = ints(lines[i]);
        if (e.size() != 2) throw std::invalid_argument("edge list: expected 'u v' in line '" + lines[i] + "'");
        b.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
    }
    return b.build();
}

Graph parse_graph(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw std::invalid_argument("empty input");
    std::istringstream in(lines[0]);
    long long a, b;
    if (in >> a >> b) return parse_edge_list(text);
    if (lines.size() != 1) throw std::invalid_argument("graph6 input must be a single line");
    return parse_graph6(lines[0]);
}

std::string rep_to_json(const GridRepresentation& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (Vertex v = 0; v < rep.order(); ++v) {
        const auto& s = rep.paths[idx(v)];
        arr.push_back({{"vertex", v},
                       {"orient", s.orient == Orientation::Horizontal ? "H" : "V"},
                       {"line", s.line},
                       {"lo", s.lo},
                       {"hi", s.hi}});
    }
    return arr.dump(2) + "\n";
}

GridRepresentation rep_from_json(std::string_view text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("representation json: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("representation json: expected an array");
    GridRepresentation rep;
    rep.paths.resize(arr.size());
    std::vector<bool> seen(arr.size(), false);
    try {
        for (const auto& o : arr) {
            int v = o.at("vertex").get<int>();
            if (v < 0 || idx(v) >= arr.size() || seen[idx(v)])
                throw std::invalid_argument("representation json: bad or repeated vertex " + std::to_string(v));
            seen[idx(v)] = true;
            auto orient = o.at("orient").get<std::string>();
            if (orient != "H" && orient != "V") throw std::invalid_argument("representation json: orient must be H or V");
            rep.paths[idx(v)] = {orient == "H" ? Orientation::Horizontal : Orientation::Vertical, o.at("line").get<int>(),
                                 o.at("lo").get<int>(), o.at("hi").get<int>()};
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("representation json: ") + e.what());
    }
    return rep;
}

std::string witness_to_json(const Witness& w) {
    nlohmann::json o{{"pattern", pattern_name(w.pattern)}, {"map", w.map}};
    return o.dump();
}

std::string render_ascii(const GridRepresentation& rep) {
    if (rep.paths.empty()) return "";
    auto b = bounding_box(rep);
    const int w = b.columns(), h = b.rows();
    std::vector<std::string> grid(idx(h), std::string(idx(w), '.'));
    auto cell = [&](int x, int y) -> char& { return grid[idx(b.max_y - y)][idx(x - b.min_x)]; };
    for (const auto& s : rep.paths) {
        const bool hz = s.orient == Orientation::Horizontal;
        for (int c = s.lo + 1; c < s.hi; ++c) {
            char& ch = hz ? cell(c, s.line) : cell(s.line, c);
            if (ch != '+') ch = hz ? '-' : '|';
        }
    }
    for (const auto& s : rep.paths)
        for (auto p : {s.first(), s.second()}) cell(p.x, p.y) = '+';
    std::string out;
    for (const auto& row : grid) out += row + "\n";
    return out;
}

std::string render_svg(const GridRepresentation& rep) {
    constexpr int unit = 20, margin = 20;
    auto b = rep.paths.empty() ? BoundingBox{} : bounding_box(rep);
    const int width = (b.columns() - 1) * unit + 2 * margin;
    const int height = (b.rows() - 1) * unit + 2 * margin;
    auto px = [&](int x) { return margin + (x - b.min_x) * unit; };
    auto py = [&](int y) { return margin + (b.max_y - y) * unit; };
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<g stroke=\"#ddd\" stroke-width=\"1\">\n";
    for (int x = b.min_x; x <= b.max_x; ++x)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(b.max_y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(b.min_y)
            << "\"/>\n";
    for (int y = b.min_y; y <= b.max_y; ++y)
        out << "<line x1=\"" << px(b.min_x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(b.max_x) << "\" y2=\"" << py(y)
            << "\"/>\n";
    out << "</g>\n<g stroke=\"#1f4e9c\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (Vertex v = 0; v < rep.order(); ++v) {
        auto p = rep.paths[idx(v)].first(), q = rep.paths[idx(v)].second();
        out << "<line id=\"v" << v << "\" x1=\"" << px(p.x) << "\" y1=\"" << py(p.y) << "\" x2=\"" << px(q.x)
            << "\" y2=\"" << py(q.y) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#c0392b\">\n";
    for (const auto& s : rep.paths)
        for (auto p : {s.first(), s.second()}) out << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\"/>\n";
    out << "</g>\n<g font-family=\"monospace\" font-size=\"10\" fill=\"#000\">\n";
    for (Vertex v = 0; v < rep.order(); ++v) {
        const auto& s = rep.paths[idx(v)];
        auto p = s.first(), q = s.second();
        int mx = (px(p.x) + px(q.x)) / 2 + 3, my = (py(p.y) + py(q.y)) / 2 - 3;
        out << "<text x=\"" << mx << "\" y=\"" << my << "\">" << v << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace cvpg
