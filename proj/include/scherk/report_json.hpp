#pragma once

#include "scherk/exhaust.hpp"
#include "scherk/json_writer.hpp"

// JSON fragments for the report payloads. All writers emit keys in a fixed
// order; documents are byte-identical across runs for identical inputs.

namespace scherk {

void write_admissibility(JsonWriter& w, const AdmissibilityReport& report);
void write_record(JsonWriter& w, const ExtensionRecord& rec);
void write_records(JsonWriter& w, const std::vector<ExtensionRecord>& recs);
void write_trace(JsonWriter& w, const ExhaustionTrace& trace);

// FNV-1a over the document text, used to stamp derived outputs.
std::string fnv1a_hex(std::string_view text);

}  // namespace scherk
