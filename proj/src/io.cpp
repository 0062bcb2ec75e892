#include "peaklab/io.hpp"

#include <cstdio>
#include <sstream>

namespace peaklab {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex_pair(Complex z) {
    return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

void JsonWriter::comma() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
    comma();
    out_ += '{';
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key) {
    comma();
    out_ += '"' + key + "\":[";
    return *this;
}

JsonWriter& JsonWriter::begin_object(const std::string& key) {
    comma();
    out_ += '"' + key + "\":{";
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const std::string& value) {
    comma();
    out_ += '"' + key + "\":\"" + value + '"';
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, const char* value) {
    return field(key, std::string(value));
}

JsonWriter& JsonWriter::field(const std::string& key, double value) {
    comma();
    out_ += '"' + key + "\":" + fmt_double(value);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, int value) {
    comma();
    out_ += '"' + key + "\":" + std::to_string(value);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, std::int64_t value) {
    comma();
    out_ += '"' + key + "\":" + std::to_string(value);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field(const std::string& key, bool value) {
    comma();
    out_ += '"' + key + "\":" + (value ? "true" : "false");
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field_complex(const std::string& key, Complex value) {
    comma();
    out_ += '"' + key + "\":" + fmt_complex_pair(value);
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::field_raw(const std::string& key, const std::string& raw) {
    comma();
    out_ += '"' + key + "\":" + raw;
    need_comma_ = true;
    return *this;
}

JsonWriter& JsonWriter::element_raw(const std::string& raw) {
    comma();
    out_ += raw;
    need_comma_ = true;
    return *this;
}

std::string series_to_json(const CoefficientSeries& s) {
    JsonWriter w;
    w.begin_object();
    w.field("degree", s.degree());
    w.begin_array("coefficients");
    for (int j = 0; j <= s.degree(); ++j) w.element_raw(fmt_complex_pair(s.coefficient(j)));
    w.end_array();
    w.field("l1_norm", s.l1_norm());
    w.end_object();
    return w.str();
}

std::string series_to_csv(const CoefficientSeries& s) {
    std::string out = "j,re,im\n";
    for (int j = 0; j <= s.degree(); ++j) {
        out += std::to_string(j) + "," + fmt_double(s.coefficient(j).real()) + "," +
               fmt_double(s.coefficient(j).imag()) + "\n";
    }
    return out;
}

std::string table_to_csv(const FourierCoefficientTable& t) {
    std::string method = method_name(t.method);
    if (t.method == CoeffMethod::oracle) {
        method += "(stage " + std::to_string(t.oracle_stage) + ")";
    }
    std::string out = "n,re,im,abs,method,tail_bound\n";
    for (const auto& row : t.rows) {
        out += std::to_string(row.n) + "," + fmt_double(row.value.real()) + "," +
               fmt_double(row.value.imag()) + "," + fmt_double(std::abs(row.value)) + "," +
               method + "," + fmt_double(row.tail_bound) + "\n";
    }
    return out;
}

std::string table_to_json(const FourierCoefficientTable& t) {
    JsonWriter w;
    w.begin_object();
    w.field("schema_version", "1");
    w.field("xi", t.ratio.str());
    w.field("method", method_name(t.method));
    if (t.method == CoeffMethod::oracle) {
        w.field("stage", t.oracle_stage);
    } else {
        w.field("tol", t.tol);
    }
    w.begin_array("rows");
    for (const auto& row : t.rows) {
        w.element_raw("{\"n\":" + std::to_string(row.n) +
                      ",\"re\":" + fmt_double(row.value.real()) +
                      ",\"im\":" + fmt_double(row.value.imag()) +
                      ",\"abs\":" + fmt_double(std::abs(row.value)) +
                      ",\"tail_bound\":" + fmt_double(row.tail_bound) + "}");
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string weight_moments_to_csv(const HerglotzWeight& w) {
    std::string out = "k,re,im\n";
    for (std::size_t k = 0; k < w.moments.size(); ++k) {
        out += std::to_string(k) + "," + fmt_double(w.moments[k].real()) + "," +
               fmt_double(w.moments[k].imag()) + "\n";
    }
    return out;
}

}  // namespace peaklab
