#include "unitals/io.hpp"

#include <fstream>
#include <sstream>

namespace unitals {

namespace {

void write_tower_header(std::ostream& os, const FieldTower& F) {
    os << "p " << F.p() << "\n";
    os << "r " << F.r() << "\n";
    os << "modulus";
    for (auto c : F.modulus()) os << ' ' << c;
    os << "\n";
}

std::string expect_line(std::istream& is, const std::string& key) {
    std::string line;
    if (!std::getline(is, line)) throw IoError("unexpected end of file, wanted '" + key + "'");
    if (line.rfind(key + " ", 0) != 0 && line != key)
        throw IoError("expected '" + key + "' line, got '" + line + "'");
    return line.size() > key.size() ? line.substr(key.size() + 1) : "";
}

uint32_t parse_u32(const std::string& s) {
    size_t pos = 0;
    unsigned long v = std::stoul(s, &pos);
    if (pos != s.size()) throw IoError("trailing characters in number '" + s + "'");
    return static_cast<uint32_t>(v);
}

std::vector<uint32_t> parse_u32_list(const std::string& s) {
    std::istringstream ss(s);
    std::vector<uint32_t> out;
    uint32_t v;
    while (ss >> v) out.push_back(v);
    return out;
}

void check_tower(uint32_t p, uint32_t r, const std::vector<uint32_t>& modulus,
                 const FieldTower& expect) {
    if (p != expect.p() || r != expect.r())
        throw IoError("tower mismatch: file has p=" + std::to_string(p) +
                      " r=" + std::to_string(r) + ", expected p=" + std::to_string(expect.p()) +
                      " r=" + std::to_string(expect.r()));
    if (modulus != expect.modulus()) throw IoError("tower mismatch: modulus differs");
}

}  // namespace

void write_unital(std::ostream& os, const Unital& U) {
    os << "unital-file 1\n";
    write_tower_header(os, U.tower());
    os << "kind " << U.kind() << "\n";
    os << "points " << U.size() << "\n";
    for (const auto& P : U.points()) os << to_string(P) << "\n";
}

void write_unital_file(const std::string& path, const Unital& U) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_unital(os, U);
    if (!os) throw IoError("write failed: " + path);
}

Unital read_unital(std::istream& is, const FieldTower& expect) {
    if (expect_line(is, "unital-file") != "1") throw IoError("unsupported unital file version");
    const uint32_t p = parse_u32(expect_line(is, "p"));
    const uint32_t r = parse_u32(expect_line(is, "r"));
    const auto modulus = parse_u32_list(expect_line(is, "modulus"));
    check_tower(p, r, modulus, expect);
    const std::string kind = expect_line(is, "kind");
    const uint32_t n = parse_u32(expect_line(is, "points"));
    std::vector<ProjPoint> pts;
    pts.reserve(n);
    std::string line;
    for (uint32_t i = 0; i < n; ++i) {
        if (!std::getline(is, line)) throw IoError("unital file truncated");
        try {
            pts.push_back(point_from_string(expect, line));
        } catch (const std::exception& e) {
            throw IoError(std::string("bad point: ") + e.what());
        }
    }
    Unital U(expect, std::move(pts), kind);
    if (U.size() != n) throw IoError("duplicate points in unital file");
    return U;
}

Unital read_unital_file(const std::string& path, const FieldTower& expect) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    return read_unital(is, expect);
}

std::pair<uint32_t, uint32_t> peek_unital_tower(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    if (expect_line(is, "unital-file") != "1") throw IoError("unsupported unital file version");
    const uint32_t p = parse_u32(expect_line(is, "p"));
    const uint32_t r = parse_u32(expect_line(is, "r"));
    return {p, r};
}

void write_plane(std::ostream& os, const QuotientPlane& Pi) {
    os << "plane-file 1\n";
    write_tower_header(os, *Pi.F);
    os << "lambda " << Pi.lambda << "\n";
    os << "points " << Pi.point_count() << "\n";
    for (const auto& orb : Pi.points) {
        os << "orbit " << orb.id << " " << orb.length();
        for (const auto& P : orb.points) os << ' ' << to_string(P);
        os << "\n";
    }
    os << "lines " << Pi.line_count() << "\n";
    for (size_t l = 0; l < Pi.lines.size(); ++l) {
        os << "line " << l << ' ';
        switch (Pi.lines[l].tag) {
            case QuotientPlane::LineTag::axis_y: os << "axis_y"; break;
            case QuotientPlane::LineTag::curve: os << "curve " << Pi.lines[l].param; break;
            case QuotientPlane::LineTag::cone: os << "cone " << Pi.lines[l].param; break;
        }
        os << "\n";
    }
    os << "incidence " << Pi.point_count() << "\n";
    static const char* hex = "0123456789abcdef";
    for (const auto& row : Pi.incidence) {
        std::string h;
        for (uint8_t byte : row) {
            h += hex[(byte >> 4) & 0xf];
            h += hex[byte & 0xf];
        }
        os << h << "\n";
    }
}

void write_plane_file(const std::string& path, const QuotientPlane& Pi) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open for writing: " + path);
    write_plane(os, Pi);
    if (!os) throw IoError("write failed: " + path);
}

PlaneFile read_plane_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open: " + path);
    PlaneFile f;
    if (expect_line(is, "plane-file") != "1") throw IoError("unsupported plane file version");
    f.p = parse_u32(expect_line(is, "p"));
    f.r = parse_u32(expect_line(is, "r"));
    f.modulus = parse_u32_list(expect_line(is, "modulus"));
    f.lambda = parse_u32(expect_line(is, "lambda"));
    const uint32_t n = parse_u32(expect_line(is, "points"));
    for (uint32_t i = 0; i < n; ++i) {
        std::istringstream ss(expect_line(is, "orbit"));
        uint32_t id, len;
        ss >> id >> len;
        if (id != i) throw IoError("orbit ids out of order");
        std::vector<std::string> pts;
        std::string tok;
        while (ss >> tok) pts.push_back(tok);
        if (pts.size() != len) throw IoError("orbit length mismatch");
        f.orbit_points.push_back(std::move(pts));
    }
    const uint32_t m = parse_u32(expect_line(is, "lines"));
    for (uint32_t i = 0; i < m; ++i) {
        std::istringstream ss(expect_line(is, "line"));
        uint32_t id;
        ss >> id;
        if (id != i) throw IoError("line ids out of order");
        std::string rest;
        std::getline(ss, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
        f.line_tags.push_back(rest);
    }
    const uint32_t k = parse_u32(expect_line(is, "incidence"));
    std::string line;
    for (uint32_t i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw IoError("incidence rows truncated");
        f.incidence_rows.push_back(line);
    }
    return f;
}

} // namespace unitals
