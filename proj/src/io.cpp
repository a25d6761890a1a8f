#include "bicolor/io.hpp"

#include <fstream>
#include <sstream>

#include "bicolor/errors.hpp"

namespace bicolor {

std::string to_bcg(const BicoloredGraph& g) {
    std::string out = "bcg 1\n";
    out += "n " + std::to_string(g.vertex_count()) + "\n";
    g.for_each_edge([&](int u, int v, Color c) {
        out += "e " + std::to_string(u) + " " + std::to_string(v) + " ";
        out += color_char(c);
        out += "\n";
    });
    return out;
}

BicoloredGraph parse_bcg(std::string_view text, std::string_view source) {
    std::string file(source);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_magic = false;
    bool have_n = false;
    BicoloredGraph g;

    auto fail = [&](const std::string& what) -> void { throw ParseError(file, lineno, what); };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (!have_magic) {
            int version = -1;
            if (tok != "bcg" || !(ls >> version) || version != 1) fail("expected header 'bcg 1'");
            have_magic = true;
            continue;
        }
        if (tok == "n") {
            if (have_n) fail("duplicate vertex-count line");
            long long n = -1;
            if (!(ls >> n) || n < 0) fail("invalid vertex count");
            g = BicoloredGraph(static_cast<int>(n));
            have_n = true;
            continue;
        }
        if (tok == "e") {
            if (!have_n) fail("edge before vertex count");
            long long u = -1, v = -1;
            std::string cs;
            if (!(ls >> u >> v >> cs)) fail("malformed edge line");
            if (cs != "R" && cs != "B") fail("edge color must be R or B");
            if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
                fail("endpoint out of range");
            if (u == v) fail("self-loop");
            if (u > v) fail("endpoints must satisfy u < v");
            if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail("duplicate edge");
            g.add_edge(static_cast<int>(u), static_cast<int>(v), cs == "R" ? Color::Red : Color::Blue);
            continue;
        }
        fail("unknown directive '" + tok + "'");
    }
    if (!have_magic) throw ParseError(file, lineno, "missing 'bcg 1' header");
    if (!have_n) throw ParseError(file, lineno, "missing vertex-count line");
    return g;
}

BicoloredGraph load_bcg(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bcg(buf.str(), path.string());
}

void save_bcg(const BicoloredGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << to_bcg(g);
}

} // namespace bicolor
