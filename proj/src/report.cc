// src/report.cc
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pier/report.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pier/error.h"
#include "pier/utf8.h"

namespace pier {

MetricSet MetricSet::parse(std::string_view csv) {
  MetricSet set;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view name = csv.substr(pos, comma - pos);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (name == "wer") {
      set.wer = true;
    } else if (name == "cer") {
      set.cer = true;
    } else if (name == "mer") {
      set.mer = true;
    } else if (name == "pier") {
      set.pier = true;
    } else if (!name.empty()) {
      throw ConfigError("unknown metric: " + std::string(name) +
                        " (expected wer, cer, mer, pier)");
    }
    pos = comma + 1;
  }
  if (!set.any()) throw ConfigError("no metrics selected");
  return set;
}

std::vector<std::string> MetricSet::names() const {
  std::vector<std::string> out;
  if (wer) out.push_back("wer");
  if (cer) out.push_back("cer");
  if (mer) out.push_back("mer");
  if (pier) out.push_back("pier");
  return out;
}

UtteranceScore score_utterance(const Utterance& utt, const MetricSet& metrics) {
  UtteranceScore score;
  score.id = utt.id;
  if (metrics.wer || metrics.pier) {
    score.alignment = align(utt.ref_tokens, utt.hyp_tokens);
    if (metrics.wer) score.wer = wer(score.alignment);
    if (metrics.pier && utt.interest.has_value() && !utt.interest->empty()) {
      score.pier = pier_metric(score.alignment, *utt.interest);
      score.interest_ops =
          filter_ops_by_interest(error_ops(score.alignment), *utt.interest);
    }
  }
  if (metrics.cer) score.cer = cer(utt.norm_ref, utt.norm_hyp);
  if (metrics.mer) score.mer = mer(utt.norm_ref, utt.norm_hyp);
  return score;
}

std::vector<UtteranceScore> score_corpus(const std::vector<Utterance>& utts,
                                         const MetricSet& metrics, unsigned jobs) {
  std::vector<UtteranceScore> scores(utts.size());
  if (jobs <= 1 || utts.size() <= 1) {
    for (std::size_t i = 0; i < utts.size(); ++i) {
      scores[i] = score_utterance(utts[i], metrics);
    }
    return scores;
  }

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(jobs, utts.size()));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= utts.size()) return;
      try {
        scores[i] = score_utterance(utts[i], metrics);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return scores;
}

namespace {

struct Pool {
  std::uint64_t num = 0;
  std::uint64_t den = 0;
  OpBreakdown breakdown;

  void add(const std::optional<MetricValue>& v) {
    if (!v.has_value()) return;
    num += v->numerator;
    den += v->denominator;
    breakdown += v->breakdown;
  }
  std::optional<MetricValue> value() const {
    if (den == 0) return std::nullopt;
    return MetricValue{num, den, breakdown};
  }
};

}  // namespace

CorpusReport aggregate(std::vector<UtteranceScore> scores, const SkipStats& skips,
                       const CorpusSpec& spec, const MetricSet& metrics) {
  CorpusReport report;
  Pool wer_pool, cer_pool, mer_pool, pier_pool;
  for (const UtteranceScore& s : scores) {
    wer_pool.add(s.wer);
    cer_pool.add(s.cer);
    mer_pool.add(s.mer);
    pier_pool.add(s.pier);
  }
  report.pooled_wer = wer_pool.value();
  report.pooled_cer = cer_pool.value();
  report.pooled_mer = mer_pool.value();
  report.pooled_pier = pier_pool.value();
  report.breakdown_at_poi = pier_pool.breakdown;
  report.skips = skips;
  report.config_echo = spec;
  report.metrics = metrics;
  report.per_utt = std::move(scores);
  return report;
}

ReportFormat report_format_from(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "tsv") return ReportFormat::Tsv;
  if (name == "structured") return ReportFormat::Structured;
  throw ConfigError("unknown report format: " + std::string(name));
}

namespace {

std::string pct(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string_view metric_display(std::string_view key) {
  if (key == "wer") return "WER";
  if (key == "cer") return "CER";
  if (key == "mer") return "MER";
  return "PIER";
}

const std::optional<MetricValue>& pooled_for(const CorpusReport& r, std::string_view key) {
  if (key == "wer") return r.pooled_wer;
  if (key == "cer") return r.pooled_cer;
  if (key == "mer") return r.pooled_mer;
  return r.pooled_pier;
}

const std::optional<MetricValue>& utt_metric(const UtteranceScore& s, std::string_view key) {
  if (key == "wer") return s.wer;
  if (key == "cer") return s.cer;
  if (key == "mer") return s.mer;
  return s.pier;
}

std::string render_text(const CorpusReport& r, const RenderOptions& opt) {
  std::ostringstream out;
  const char* bold = opt.color ? "\x1b[1m" : "";
  const char* reset = opt.color ? "\x1b[0m" : "";

  out << "scored " << r.per_utt.size() << " utterances | skipped: "
      << r.skips.skipped_monolingual << " monolingual, "
      << r.skips.skipped_empty_ref << " empty reference | missing hypotheses: "
      << r.skips.missing_hyp_warnings << "\n";
  out << "config: tokenizer=" << tokenizer_mode_name(r.config_echo.tokenizer)
      << " poi=" << r.config_echo.poi.str()
      << " selector=" << r.config_echo.selector.str()
      << " lowercase=" << (r.config_echo.norm.lowercase ? "on" : "off")
      << " strip-punct=" << (r.config_echo.norm.strip_punct ? "on" : "off") << "\n\n";

  for (const std::string& key : r.metrics.names()) {
    const auto& v = pooled_for(r, key);
    std::string name(metric_display(key));
    name.resize(6, ' ');
    if (!v.has_value()) {
      out << bold << name << reset << "n/a  (no scoreable utterances)\n";
      continue;
    }
    out << bold << name << reset << pct(v->rate_pct()) << "  (" << v->numerator << "/"
        << v->denominator << ")  sub " << v->breakdown.n_sub << "  ins "
        << v->breakdown.n_ins << "  del " << v->breakdown.n_del << "\n";
  }

  if (r.metrics.pier && r.pooled_pier.has_value()) {
    out << "\nerrors at points of interest: sub " << r.breakdown_at_poi.n_sub
        << "  ins " << r.breakdown_at_poi.n_ins << "  del "
        << r.breakdown_at_poi.n_del << "\n";
  }

  if (opt.per_utt && !r.per_utt.empty()) {
    std::size_t idw = 3;
    for (const UtteranceScore& s : r.per_utt) idw = std::max(idw, utf8_length(s.id));
    out << "\nper utterance:\n";
    for (const UtteranceScore& s : r.per_utt) {
      for (const std::string& key : r.metrics.names()) {
        const auto& v = utt_metric(s, key);
        if (!v.has_value()) continue;
        std::string id = s.id;
        id.resize(std::max(idw, id.size()), ' ');
        std::string name(metric_display(key));
        name.resize(6, ' ');
        out << id << "  " << name << pct(v->rate_pct()) << "  (" << v->numerator << "/"
            << v->denominator << ")\n";
      }
    }
  }
  return out.str();
}

void tsv_row(std::ostringstream& out, std::string_view id, std::string_view metric,
             const MetricValue& v) {
  out << id << '\t' << metric << '\t' << v.numerator << '\t' << v.denominator << '\t'
      << pct(v.rate_pct()) << '\t' << v.breakdown.n_sub << '\t' << v.breakdown.n_ins
      << '\t' << v.breakdown.n_del << '\n';
}

std::string render_tsv(const CorpusReport& r) {
  std::ostringstream out;
  for (const UtteranceScore& s : r.per_utt) {
    for (const std::string& key : r.metrics.names()) {
      const auto& v = utt_metric(s, key);
      if (v.has_value()) tsv_row(out, s.id, key, *v);
    }
  }
  // Pooled footer rows carry the id "ALL".
  for (const std::string& key : r.metrics.names()) {
    const auto& v = pooled_for(r, key);
    if (v.has_value()) tsv_row(out, "ALL", key, *v);
  }
  return out.str();
}

nlohmann::json metric_json(const MetricValue& v) {
  return nlohmann::json{{"numerator", v.numerator},
                        {"denominator", v.denominator},
                        {"rate_pct", v.rate_pct()},
                        {"sub", v.breakdown.n_sub},
                        {"ins", v.breakdown.n_ins},
                        {"del", v.breakdown.n_del}};
}

std::string render_structured(const CorpusReport& r) {
  nlohmann::json doc;
  doc["config"] = {
      {"ref", r.config_echo.ref_path},
      {"hyp", r.config_echo.hyp_path},
      {"tokenizer", std::string(tokenizer_mode_name(r.config_echo.tokenizer))},
      {"lowercase", r.config_echo.norm.lowercase},
      {"strip_punct", r.config_echo.norm.strip_punct},
      {"poi", r.config_echo.poi.str()},
      {"selector", r.config_echo.selector.str()},
      {"metrics", r.metrics.names()},
  };
  nlohmann::json pooled = nlohmann::json::object();
  for (const std::string& key : r.metrics.names()) {
    const auto& v = pooled_for(r, key);
    if (v.has_value()) pooled[key] = metric_json(*v);
  }
  doc["pooled"] = pooled;

  nlohmann::json per_utt = nlohmann::json::array();
  for (const UtteranceScore& s : r.per_utt) {
    nlohmann::json row;
    row["id"] = s.id;
    for (const std::string& key : r.metrics.names()) {
      const auto& v = utt_metric(s, key);
      if (v.has_value()) row[key] = metric_json(*v);
    }
    per_utt.push_back(std::move(row));
  }
  doc["per_utt"] = per_utt;

  doc["skipped"] = {{"monolingual", r.skips.skipped_monolingual},
                    {"empty_ref", r.skips.skipped_empty_ref},
                    {"missing_hyp", r.skips.missing_hyp_warnings}};
  doc["breakdown_at_poi"] = {{"sub", r.breakdown_at_poi.n_sub},
                             {"ins", r.breakdown_at_poi.n_ins},
                             {"del", r.breakdown_at_poi.n_del}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const CorpusReport& report, ReportFormat format,
                   const RenderOptions& options) {
  switch (format) {
    case ReportFormat::Text: return render_text(report, options);
    case ReportFormat::Tsv: return render_tsv(report);
    case ReportFormat::Structured: return render_structured(report);
  }
  throw ConfigError("bad report format");
}

std::string dump_alignment(const UtteranceScore& score, const Utterance& utt) {
  const AlignmentTrace& trace = score.alignment;
  const InterestSet* interest =
      utt.interest.has_value() && !utt.interest->empty() ? &*utt.interest : nullptr;

  auto starred = [&](const EditOp& op) {
    if (interest == nullptr) return false;
    if (interest->contains(op.i_src)) return true;
    return interest->max_index() == trace.ref_len && op.i_src > trace.ref_len;
  };

  std::vector<std::string> ref_cells, hyp_cells, op_cells;
  for (const EditOp& op : trace.steps) {
    std::string ref_cell = "-";
    std::string hyp_cell = "-";
    if (op.kind != OpKind::Insertion) ref_cell = utt.ref_tokens[op.i_src - 1].text;
    if (op.kind != OpKind::Deletion) hyp_cell = utt.hyp_tokens[op.i_res - 1].text;
    std::string op_cell(1, op_code(op.kind));
    if (starred(op)) op_cell.push_back('*');
    ref_cells.push_back(std::move(ref_cell));
    hyp_cells.push_back(std::move(hyp_cell));
    op_cells.push_back(std::move(op_cell));
  }

  std::ostringstream ref_row, hyp_row, op_row;
  ref_row << "REF:";
  hyp_row << "HYP:";
  op_row << "OPS:";
  for (std::size_t c = 0; c < op_cells.size(); ++c) {
    const std::size_t width = std::max({utf8_length(ref_cells[c]),
                                        utf8_length(hyp_cells[c]),
                                        op_cells[c].size()});
    auto pad = [width](std::ostringstream& row, const std::string& cell) {
      row << ' ' << cell << std::string(width - utf8_length(cell), ' ');
    };
    pad(ref_row, ref_cells[c]);
    pad(hyp_row, hyp_cells[c]);
    pad(op_row, op_cells[c]);
  }
  return ref_row.str() + "\n" + hyp_row.str() + "\n" + op_row.str() + "\n";
}

}  // namespace pier
