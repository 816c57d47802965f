#include "pfbi/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "pfbi/errors.hpp"

namespace pfbi {
namespace {

double parse_double(const std::string& token, const std::filesystem::path& path) {
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("bad numeric value '" + token + "' in " + path.string());
    }
    return v;
}

std::vector<double> parse_csv_row(const std::string& line, const std::filesystem::path& path) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, ',')) {
        out.push_back(parse_double(token, path));
    }
    return out;
}

int parse_dim_header(std::ifstream& in,
                     const std::string& magic,
                     const std::filesystem::path& path) {
    std::string line;
    if (!std::getline(in, line) || line.rfind(magic, 0) != 0) {
        throw ParseError("missing '" + magic + "' header in " + path.string());
    }
    const auto pos = line.find("dim=");
    if (pos == std::string::npos) {
        throw ParseError("header lacks dim= in " + path.string());
    }
    int dim = 0;
    const char* begin = line.data() + pos + 4;
    const auto [ptr, ec] = std::from_chars(begin, line.data() + line.size(), dim);
    (void)ptr;
    if (ec != std::errc() || dim < 1) {
        throw ParseError("bad dim= value in " + path.string());
    }
    return dim;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc()) {
        throw Error("format_double: conversion failed");
    }
    return std::string(buf, ptr);
}

void write_latents_csv(const std::filesystem::path& path, const LatentDataset& data) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "# pfbi-latents v1 dim=" << data.dim() << '\n';
    for (Eigen::Index i = 0; i < data.points.rows(); ++i) {
        for (Eigen::Index c = 0; c < data.points.cols(); ++c) {
            out << (c ? "," : "") << format_double(data.points(i, c));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

LatentDataset read_latents_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    const int dim = parse_dim_header(in, "# pfbi-latents v1", path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto row = parse_csv_row(line, path);
        if (static_cast<int>(row.size()) != dim) {
            throw DimensionMismatch("row " + std::to_string(rows.size() + 1) + " of " +
                                    path.string() + " has " + std::to_string(row.size()) +
                                    " values, expected " + std::to_string(dim));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw EmptyDataset("no data rows in " + path.string());
    }
    Eigen::MatrixXd pts(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int c = 0; c < dim; ++c) {
            pts(static_cast<Eigen::Index>(i), c) = rows[i][c];
        }
    }
    return LatentDataset(std::move(pts));
}

void write_path_csv(const std::filesystem::path& path, const Path& p) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << "# pfbi-path v1 dim=" << p.dim() << '\n';
    for (int k = 0; k < p.grid.size(); ++k) {
        out << format_double(p.grid.time(k));
        for (int c = 0; c < p.dim(); ++c) {
            out << ',' << format_double(p.points(k, c));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

Path read_path_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    const int dim = parse_dim_header(in, "# pfbi-path v1", path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto row = parse_csv_row(line, path);
        if (static_cast<int>(row.size()) != dim + 1) {
            throw DimensionMismatch("path row in " + path.string() +
                                    " must hold t plus " + std::to_string(dim) + " values");
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() < 3) {
        throw ParseError("path in " + path.string() + " needs at least 3 rows");
    }
    Eigen::VectorXd times(rows.size());
    Eigen::MatrixXd pts(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        times[static_cast<Eigen::Index>(i)] = rows[i][0];
        for (int c = 0; c < dim; ++c) {
            pts(static_cast<Eigen::Index>(i), c) = rows[i][c + 1];
        }
    }
    try {
        return Path(TimeGrid(std::move(times)), std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw ParseError("invalid time column in " + path.string() + ": " + e.what());
    }
}

}  // namespace pfbi
