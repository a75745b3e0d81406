#include "scherk/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace scherk {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("JSON: non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void JsonWriter::pre_value() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_stack_.back()) out_ += ',';
    first_stack_.back() = false;
}

void JsonWriter::begin_object() {
    pre_value();
    out_ += '{';
    first_stack_.push_back(true);
}

void JsonWriter::end_object() {
    out_ += '}';
    first_stack_.pop_back();
}

void JsonWriter::begin_array() {
    pre_value();
    out_ += '[';
    first_stack_.push_back(true);
}

void JsonWriter::end_array() {
    out_ += ']';
    first_stack_.pop_back();
}

void JsonWriter::key(std::string_view k) {
    if (!first_stack_.back()) out_ += ',';
    first_stack_.back() = false;
    value_string_raw(k);
    out_ += ':';
    pending_key_ = true;
}

void JsonWriter::value(double v) {
    pre_value();
    out_ += format_double(v);
}

void JsonWriter::value(long long v) {
    pre_value();
    out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
    pre_value();
    out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
    pre_value();
    value_string_raw(v);
}

void JsonWriter::null_value() {
    pre_value();
    out_ += "null";
}

void JsonWriter::value_string_raw(std::string_view v) {
    out_ += '"';
    for (char ch : v) {
        switch (ch) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            case '\r': out_ += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out_ += buf;
                } else {
                    out_ += ch;
                }
        }
    }
    out_ += '"';
}

}  // namespace scherk
