#include "axelsmote/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "axelsmote/axelsmote.hpp"
#include "axelsmote/baseline.hpp"

namespace axelsmote::io {

// ---------------------------------------------------------------------------
// Labels

ClassId LabelMapping::encode(const std::string& name) {
    if (auto id = find(name)) return *id;
    names_.push_back(name);
    return static_cast<ClassId>(names_.size() - 1);
}

std::optional<ClassId> LabelMapping::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<ClassId>(it - names_.begin());
}

const std::string& LabelMapping::decode(ClassId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) {
        throw Error(ErrorCode::UnknownClass, "no label name for class " + std::to_string(id));
    }
    return names_[static_cast<std::size_t>(id)];
}

LabelMapping LabelMapping::numeric(std::size_t classes) {
    LabelMapping m;
    for (std::size_t c = 0; c < classes; ++c) m.names_.push_back(std::to_string(c));
    return m;
}

std::size_t PartialDataset::missing_count() const noexcept {
    return static_cast<std::size_t>(std::count(missing.begin(), missing.end(), std::uint8_t{1}));
}

// ---------------------------------------------------------------------------
// Reading

namespace {

using Record = std::vector<std::string>;

// RFC 4180 record reader: quoted fields may hold delimiters, doubled quotes
// and line breaks. Returns false at end of input.
bool read_record(std::istream& in, char delim, Record& out, std::size_t& line) {
    out.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;
    char ch;
    while (in.get(ch)) {
        any = true;
        if (in_quotes) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                if (ch == '\n') ++line;
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"') {
            in_quotes = true;
        } else if (ch == delim) {
            out.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            ++line;
            out.push_back(std::move(field));
            return true;
        } else if (ch == '\r') {
            if (in.peek() == '\n') continue;
            field.push_back(ch);
        } else {
            field.push_back(ch);
        }
    }
    if (in_quotes) {
        throw Error(ErrorCode::ParseError, "unterminated quoted field near line " + std::to_string(line + 1));
    }
    if (!any) return false;
    out.push_back(std::move(field));
    return true;
}

bool is_blank(const Record& r) { return r.size() == 1 && r.front().empty(); }

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::size_t resolve_label_column(const CsvSchema& schema, const Record& header, std::size_t width) {
    if (std::holds_alternative<std::monostate>(schema.label_column)) return width - 1;
    if (const auto* index = std::get_if<std::size_t>(&schema.label_column)) {
        if (*index >= width) {
            throw Error(ErrorCode::MissingLabelColumn, "label column index " + std::to_string(*index) +
                                                           " but rows have " + std::to_string(width) +
                                                           " columns");
        }
        return *index;
    }
    const auto& name = std::get<std::string>(schema.label_column);
    if (!schema.has_header) {
        throw Error(ErrorCode::MissingLabelColumn, "label column '" + name + "' named but the file has no header");
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name || trim(header[i]) == name) return i;
    }
    throw Error(ErrorCode::MissingLabelColumn, "no column named '" + name + "'");
}

}  // namespace

LoadedCsv read_csv(std::istream& in, const CsvSchema& schema) {
    Record record;
    std::size_t line = 0;

    Record header;
    std::optional<Record> first_data;
    while (read_record(in, schema.delimiter, record, line)) {
        if (is_blank(record)) continue;
        if (schema.has_header) header = record;
        else first_data = record;
        break;
    }
    if (header.empty() && !first_data) throw Error(ErrorCode::EmptyFile, "no rows in input");

    const std::size_t width = schema.has_header ? header.size() : first_data->size();
    if (width < 2) {
        throw Error(ErrorCode::ParseError, "need at least one feature column and a label column");
    }
    const std::size_t label_col = resolve_label_column(schema, header, width);

    LoadedCsv out;
    out.label_name = schema.has_header ? header[label_col] : "class";
    PartialDataset& data = out.data;
    if (schema.has_header) {
        for (std::size_t i = 0; i < width; ++i) {
            if (i != label_col) data.feature_names.push_back(header[i]);
        }
    }

    std::vector<double> values;
    values.reserve(width - 1);
    std::size_t row = 0;
    auto consume = [&](const Record& r) {
        if (r.size() != width) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(row) + " has " + std::to_string(r.size()) +
                            " fields, expected " + std::to_string(width),
                        CellLocation{row, std::min(r.size(), width)});
        }
        values.clear();
        for (std::size_t col = 0; col < width; ++col) {
            if (col == label_col) continue;
            const std::string_view cell = trim(r[col]);
            if (schema.missing_markers.contains(std::string(cell))) {
                values.push_back(std::numeric_limits<double>::quiet_NaN());
                data.missing.push_back(1);
                continue;
            }
            const auto number = parse_number(cell);
            if (!number) {
                throw Error(ErrorCode::ParseError,
                            "cannot parse '" + r[col] + "' at row " + std::to_string(row) +
                                ", column " + std::to_string(col),
                            CellLocation{row, col});
            }
            values.push_back(*number);
            data.missing.push_back(0);
        }
        data.features.append_row(values);
        data.labels.push_back(out.labels.encode(r[label_col]));
        ++row;
    };

    if (first_data) consume(*first_data);
    while (read_record(in, schema.delimiter, record, line)) {
        if (is_blank(record)) continue;
        consume(record);
    }
    if (row == 0) throw Error(ErrorCode::EmptyFile, "header but no data rows");
    return out;
}

LoadedCsv load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return read_csv(in, schema);
}

// ---------------------------------------------------------------------------
// Imputation and scaling

Dataset impute_missing(const PartialDataset& ds, ImputeMethod method) {
    Dataset out;
    out.features = ds.features;
    out.labels = ds.labels;
    out.feature_names = ds.feature_names;

    const std::size_t n = ds.rows();
    const std::size_t d = ds.dims();
    std::vector<double> observed;
    for (std::size_t c = 0; c < d; ++c) {
        observed.clear();
        bool has_missing = false;
        for (std::size_t r = 0; r < n; ++r) {
            if (ds.is_missing(r, c)) has_missing = true;
            else observed.push_back(ds.features(r, c));
        }
        if (!has_missing) continue;

        double fill = 0.0;
        if (method != ImputeMethod::Zero) {
            if (observed.empty()) {
                throw Error(ErrorCode::AllMissingColumn, "column " + std::to_string(c) + " has no observed values");
            }
            if (method == ImputeMethod::Mean) {
                double sum = 0.0;
                for (double v : observed) sum += v;
                fill = sum / static_cast<double>(observed.size());
            } else {
                std::sort(observed.begin(), observed.end());
                const std::size_t mid = observed.size() / 2;
                fill = observed.size() % 2 ? observed[mid] : 0.5 * (observed[mid - 1] + observed[mid]);
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (ds.is_missing(r, c)) out.features(r, c) = fill;
        }
    }
    return out;
}

NormalizationParams fit_normalization(const Matrix& features) {
    NormalizationParams p;
    p.min.assign(features.cols(), std::numeric_limits<double>::infinity());
    p.max.assign(features.cols(), -std::numeric_limits<double>::infinity());
    for (std::size_t r = 0; r < features.rows(); ++r) {
        for (std::size_t c = 0; c < features.cols(); ++c) {
            p.min[c] = std::min(p.min[c], features(r, c));
            p.max[c] = std::max(p.max[c], features(r, c));
        }
    }
    return p;
}

void NormalizationParams::apply(Matrix& m) const {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const double span = max[c] - min[c];
            m(r, c) = span > 0.0 ? (m(r, c) - min[c]) / span : 0.0;
        }
    }
}

void NormalizationParams::invert(Matrix& m) const {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const double span = max[c] - min[c];
            m(r, c) = span > 0.0 ? m(r, c) * span + min[c] : min[c];
        }
    }
}

std::pair<Dataset, NormalizationParams> normalize(const Dataset& ds) {
    auto params = fit_normalization(ds.features);
    Dataset out = ds;
    params.apply(out.features);
    out.normalized = true;
    return {std::move(out), std::move(params)};
}

// ---------------------------------------------------------------------------
// Writing

std::vector<std::int64_t> provenance_from(const SyntheticBatch& batch, std::size_t original_rows) {
    std::vector<std::int64_t> out(original_rows, -1);
    for (const auto& s : batch.samples) out.push_back(static_cast<std::int64_t>(s.base_index));
    return out;
}

std::vector<std::int64_t> provenance_from(const SmoteResult& result, std::size_t original_rows) {
    std::vector<std::int64_t> out(original_rows, -1);
    for (const auto& s : result.samples) out.push_back(static_cast<std::int64_t>(s.base_index));
    return out;
}

std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

namespace {

void write_field(std::ostream& out, std::string_view text, char delim) {
    const bool needs_quotes = text.find_first_of(std::string{delim, '"', '\n', '\r'}) != std::string_view::npos ||
                              (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                                                 text.back() == ' ' || text.back() == '\t'));
    if (!needs_quotes) {
        out << text;
        return;
    }
    out << '"';
    for (char ch : text) {
        if (ch == '"') out << '"';
        out << ch;
    }
    out << '"';
}

template <typename CellWriter>
void write_table(std::size_t rows, std::size_t dims, const std::vector<std::string>& names,
                 const std::vector<ClassId>& labels, const LabelMapping& mapping,
                 std::ostream& out, const ExportOptions& options, CellWriter&& cell) {
    if (options.include_provenance && options.base_indices.size() != rows) {
        throw Error(ErrorCode::DimensionMismatch, "provenance has " + std::to_string(options.base_indices.size()) +
                                                      " entries for " + std::to_string(rows) + " rows");
    }
    const char delim = options.delimiter;
    for (std::size_t c = 0; c < dims; ++c) {
        write_field(out, names.empty() ? "f" + std::to_string(c) : names[c], delim);
        out << delim;
    }
    write_field(out, options.label_name, delim);
    if (options.include_provenance) out << delim << "is_synthetic" << delim << "base_index";
    out << '\n';

    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < dims; ++c) {
            cell(out, r, c);
            out << delim;
        }
        write_field(out, mapping.decode(labels[r]), delim);
        if (options.include_provenance) {
            const auto base = options.base_indices[r];
            out << delim << (base >= 0 ? 1 : 0) << delim << base;
        }
        out << '\n';
    }
    if (!out) throw Error(ErrorCode::IoError, "write failed");
}

}  // namespace

void write_csv(const Dataset& ds, const LabelMapping& labels, std::ostream& out,
               const ExportOptions& options) {
    write_table(ds.rows(), ds.dims(), ds.feature_names, ds.labels, labels, out, options,
                [&](std::ostream& o, std::size_t r, std::size_t c) { o << format_number(ds.features(r, c)); });
}

void write_csv(const PartialDataset& ds, const LabelMapping& labels, std::ostream& out,
               const ExportOptions& options) {
    write_table(ds.rows(), ds.dims(), ds.feature_names, ds.labels, labels, out, options,
                [&](std::ostream& o, std::size_t r, std::size_t c) {
                    if (!ds.is_missing(r, c)) o << format_number(ds.features(r, c));
                });
}

void export_csv(const Dataset& ds, const LabelMapping& labels, const std::filesystem::path& path,
                const ExportOptions& options) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    write_csv(ds, labels, out, options);
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace axelsmote::io
