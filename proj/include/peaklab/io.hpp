#pragma once

#include <string>
#include <vector>

#include "peaklab/classify.hpp"
#include "peaklab/fourier.hpp"
#include "peaklab/peaks.hpp"
#include "peaklab/support.hpp"

namespace peaklab {

/// Formats with 17 significant digits (shortest stable form for golden files).
std::string fmt_double(double v);
std::string fmt_complex_pair(Complex z);  // "[re,im]"

/// Minimal ordered JSON writer: keys appear in insertion order, all floats go
/// through fmt_double, no whitespace variance.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array(const std::string& key);
    JsonWriter& begin_object(const std::string& key);
    JsonWriter& end_array();
    JsonWriter& field(const std::string& key, const std::string& value);
    JsonWriter& field(const std::string& key, const char* value);
    JsonWriter& field(const std::string& key, double value);
    JsonWriter& field(const std::string& key, int value);
    JsonWriter& field(const std::string& key, std::int64_t value);
    JsonWriter& field(const std::string& key, bool value);
    JsonWriter& field_complex(const std::string& key, Complex value);
    JsonWriter& field_raw(const std::string& key, const std::string& raw);
    JsonWriter& element_raw(const std::string& raw);
    std::string str() const { return out_; }

private:
    void comma();
    std::string out_;
    bool need_comma_ = false;
};

std::string series_to_json(const CoefficientSeries& s);
std::string series_to_csv(const CoefficientSeries& s);
std::string table_to_csv(const FourierCoefficientTable& t);
std::string table_to_json(const FourierCoefficientTable& t);
std::string weight_moments_to_csv(const HerglotzWeight& w);

}  // namespace peaklab
