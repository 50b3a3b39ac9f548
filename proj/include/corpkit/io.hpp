// Copyright 2026 The corpkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "corpkit/association.hpp"
#include "corpkit/ingest.hpp"
#include "corpkit/profiles.hpp"
#include "corpkit/stats.hpp"
#include "json.hpp"

namespace corpkit {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// word, score, freq_target, freq_reference, smoothed; score descending.
void write_association_tsv(std::ostream& out, const AssociationTable& table);
AssociationTable read_association_tsv(std::istream& in, const std::string& source = "<stream>");
AssociationTable read_association_tsv_file(const std::string& path);

// bin_center, n_words, mean_v, mean_a, mean_d
void write_trend_csv(std::ostream& out, const TrendCurve& curve);

// doc_id, user, text; tabs and newlines in fields become spaces.
void write_annotation_tsv(std::ostream& out, std::span<const Document> docs);

nlohmann::ordered_json to_json(const PipelineStats& stats);
nlohmann::ordered_json to_json(const Chi2Result& r);
nlohmann::ordered_json to_json(const EmotionProfile& p);
nlohmann::ordered_json to_json(const VadExtremesProfile& p);
nlohmann::ordered_json to_json(const AgeProfile& p);
nlohmann::ordered_json to_json(const TrendCurve& c);

// corpus,label,count,denominator,percent
void write_emotion_csv(std::ostream& out, std::span<const EmotionProfile> profiles);
// corpus,dimension,class,count,denominator,percent
void write_vad_csv(std::ostream& out, std::span<const VadExtremesProfile> profiles);
// corpus,group,count,denominator,percent
void write_age_csv(std::ostream& out, std::span<const AgeProfile> profiles);

// Writes to a temporary sibling and renames over the target on commit().
// An uncommitted file is removed on destruction, so readers never see a
// partial output.
class AtomicFile {
 public:
  explicit AtomicFile(std::filesystem::path target);
  AtomicFile(const AtomicFile&) = delete;
  AtomicFile& operator=(const AtomicFile&) = delete;
  ~AtomicFile();

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

}  // namespace corpkit
