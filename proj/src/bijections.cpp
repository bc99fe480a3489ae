#include "bijections.hpp"

#include "errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcdiag {

namespace {

int step_delta(Step s) {
  switch (s) {
    case Step::Up: return 1;
    case Step::Horizontal: return 0;
    case Step::Down: return -1;
  }
  return 0;
}

// Running height after each prefix; returns -1 if it ever drops below zero.
int final_height_of(std::span<const Step> steps) {
  int height = 0;
  for (Step s : steps) {
    height += step_delta(s);
    if (height < 0) return -1;
  }
  return height;
}

void require_motzkin_diagram(const ArcDiagram& diagram) {
  if (!validate(diagram) || has_crossing(diagram)) {
    throw Error(ErrorCode::WrongFamily,
                "not a Motzkin diagram: " + format_diagram(diagram));
  }
}

void require_symmetric(const ArcDiagram& diagram) {
  if (!is_symmetric(diagram)) {
    throw Error(ErrorCode::NotSymmetric, "diagram is not symmetric: " + format_diagram(diagram));
  }
}

TernaryWord repeat_digit(std::uint8_t digit, int count) {
  return TernaryWord(std::vector<std::uint8_t>(static_cast<std::size_t>(count), digit));
}

void motzkin_paths(int remaining, int height, std::vector<Step>& steps,
                   const std::function<void(const MotzkinPath&)>& visit) {
  if (remaining == 0) {
    if (height == 0) visit(MotzkinPath(steps));
    return;
  }
  if (height + 1 <= remaining - 1) {
    steps.push_back(Step::Up);
    motzkin_paths(remaining - 1, height + 1, steps, visit);
    steps.pop_back();
  }
  if (height <= remaining - 1) {
    steps.push_back(Step::Horizontal);
    motzkin_paths(remaining - 1, height, steps, visit);
    steps.pop_back();
  }
  if (height > 0) {
    steps.push_back(Step::Down);
    motzkin_paths(remaining - 1, height - 1, steps, visit);
    steps.pop_back();
  }
}

void ternary_words(int n, int position, int remaining_sum, std::vector<std::uint8_t>& digits,
                   std::vector<TernaryWord>& out) {
  if (position == n) {
    if (remaining_sum == 0) out.emplace_back(digits);
    return;
  }
  const int left_after = n - position - 1;
  for (int d = position == 0 ? 1 : 0; d <= 2; ++d) {
    const int rest = remaining_sum - d;
    if (rest < 0 || rest > 2 * left_after) continue;
    digits.push_back(static_cast<std::uint8_t>(d));
    ternary_words(n, position + 1, rest, digits, out);
    digits.pop_back();
  }
}

}  // namespace

// --- value types -------------------------------------------------------------

MotzkinPrefix::MotzkinPrefix(std::vector<Step> steps) : steps_(std::move(steps)) {
  final_height_ = final_height_of(steps_);
  if (final_height_ < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "steps " + format_steps(steps_) + " go below the axis");
  }
}

MotzkinPath::MotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  const int h = final_height_of(steps_);
  if (h != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "steps " + format_steps(steps_) +
                    (h < 0 ? " go below the axis" : " do not return to the axis"));
  }
}

TernaryWord::TernaryWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 2) throw Error(ErrorCode::InvalidArgument, "ternary digit out of range");
  }
}

int TernaryWord::digit_sum() const noexcept {
  int sum = 0;
  for (auto d : digits_) sum += d;
  return sum;
}

std::string TernaryWord::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto d : digits_) out += static_cast<char>('0' + d);
  return out;
}

TernaryWord& TernaryWord::operator+=(const TernaryWord& other) {
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
  return *this;
}

bool in_ternary_set(const TernaryWord& word, int n) {
  return n >= 1 && static_cast<int>(word.size()) == n && word.digit_sum() == n &&
         word.digits().front() != 0;
}

std::vector<Step> parse_steps(std::string_view text) {
  std::vector<Step> steps;
  for (char c : text) {
    switch (c) {
      case 'U': case 'u': steps.push_back(Step::Up); break;
      case 'H': case 'h': steps.push_back(Step::Horizontal); break;
      case 'D': case 'd': steps.push_back(Step::Down); break;
      case ',': case ' ': case '\t': case '\n': case '\r': break;
      default:
        throw Error(ErrorCode::Parse, "bad step '" + std::string(1, c) + "' in '" +
                                          std::string(text) + "' (expected U, H or D)");
    }
  }
  return steps;
}

std::string format_steps(std::span<const Step> steps) {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) {
    out += s == Step::Up ? 'U' : s == Step::Horizontal ? 'H' : 'D';
  }
  return out;
}

TernaryWord parse_ternary(std::string_view text) {
  std::vector<std::uint8_t> digits;
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw Error(ErrorCode::Parse, "bad ternary digit '" + std::string(1, c) + "' in '" +
                                        std::string(text) + "'");
    }
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TernaryWord(std::move(digits));
}

// --- phi ---------------------------------------------------------------------

ArcDiagram phi(const MotzkinPath& path) {
  const auto steps = path.steps();
  std::vector<int> open;
  std::vector<Arc> arcs;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const int from = static_cast<int>(t) + 1;  // step t joins node `from` to `from + 1`
    if (steps[t] == Step::Up) {
      open.push_back(from);
    } else if (steps[t] == Step::Down) {
      arcs.push_back({open.back(), from + 1});
      open.pop_back();
    }
  }
  return ArcDiagram(static_cast<int>(steps.size()) + 1, std::move(arcs));
}

MotzkinPath phi_inverse(const ArcDiagram& diagram) {
  require_motzkin_diagram(diagram);
  const int n = diagram.node_count();
  if (n == 0) throw Error(ErrorCode::WrongFamily, "the empty diagram has no Motzkin path");
  std::vector<Step> steps(static_cast<std::size_t>(n - 1), Step::Horizontal);
  for (const Arc& arc : diagram.arcs()) {
    steps[arc.left - 1] = Step::Up;
    steps[arc.right - 2] = Step::Down;
  }
  MotzkinPath path(std::move(steps));
  if (phi(path) != diagram) {
    throw std::logic_error("phi_inverse: round trip mismatch for " + format_diagram(diagram));
  }
  return path;
}

void require_symmetric_odd_motzkin(const ArcDiagram& diagram) {
  if (diagram.node_count() % 2 == 0) {
    throw Error(ErrorCode::WrongParity, "expected an odd number of nodes, got " +
                                            std::to_string(diagram.node_count()));
  }
  require_motzkin_diagram(diagram);
  require_symmetric(diagram);
}

MotzkinPrefix phi_left(const ArcDiagram& diagram) {
  require_symmetric_odd_motzkin(diagram);
  const MotzkinPath path = phi_inverse(diagram);
  const auto half = static_cast<std::ptrdiff_t>((diagram.node_count() - 1) / 2);
  return MotzkinPrefix(std::vector<Step>(path.steps().begin(), path.steps().begin() + half));
}

TernaryWord tau(std::span<const Step> steps) {
  std::vector<std::uint8_t> digits;
  digits.reserve(steps.size());
  for (Step s : steps) digits.push_back(static_cast<std::uint8_t>(step_delta(s) + 1));
  return TernaryWord(std::move(digits));
}

// --- psi -----------------------------------------------------------------------

std::string_view psi_case_name(PsiCase c) noexcept {
  switch (c) {
    case PsiCase::EndsAtZero: return "ends-at-0";
    case PsiCase::EndsAtOne: return "ends-at-1";
    case PsiCase::FullAscent: return "full-ascent";
    case PsiCase::General: return "general";
  }
  return "?";
}

PsiCase classify_psi_case(const MotzkinPrefix& prefix) {
  const int n = static_cast<int>(prefix.size()) + 1;
  const int m = prefix.final_height();
  if (m == 0) return PsiCase::EndsAtZero;
  if (m == 1) return PsiCase::EndsAtOne;
  if (n > 2 && m == n - 1) return PsiCase::FullAscent;
  return PsiCase::General;
}

TernaryWord full_ascent_word(int length) {
  if (length < 3) {
    throw Error(ErrorCode::InvalidArgument, "full ascent word needs length >= 3");
  }
  const int k = length / 2;
  TernaryWord word;
  if (length % 2 == 0) {
    word += repeat_digit(2, 1);
    word += repeat_digit(0, k);
    word += repeat_digit(2, k - 1);
  } else {
    word += repeat_digit(1, 1);
    word += repeat_digit(0, k);
    word += repeat_digit(2, k);
  }
  return word;
}

PrefixFactorization factorize_prefix(const MotzkinPrefix& prefix) {
  const auto steps = prefix.steps();
  const int len = static_cast<int>(steps.size());
  std::vector<int> height(len + 1, 0);
  for (int t = 0; t < len; ++t) height[t + 1] = height[t] + step_delta(steps[t]);
  // min_after[t] = min of height[t..len]
  std::vector<int> min_after(len + 2, 0);
  min_after[len] = height[len];
  for (int t = len - 1; t >= 0; --t) min_after[t] = std::min(height[t], min_after[t + 1]);

  // An Up is unmatched iff the path never comes back down to its start height.
  std::vector<int> unmatched;
  for (int t = 0; t < len; ++t) {
    if (steps[t] == Step::Up && min_after[t + 1] > height[t]) unmatched.push_back(t);
  }
  if (unmatched.empty()) {
    throw Error(ErrorCode::InvalidArgument, "prefix has no unmatched up step");
  }

  auto slice = [&steps](int from, int to) {
    return std::vector<Step>(steps.begin() + from, steps.begin() + to);
  };
  PrefixFactorization f;
  f.motzkin.push_back(slice(0, unmatched.front()));
  int segment_start = unmatched.front() + 1;
  std::size_t i = 1;
  while (i < unmatched.size()) {
    const int run_start = unmatched[i];
    std::size_t j = i;
    while (j + 1 < unmatched.size() && unmatched[j + 1] == unmatched[j] + 1) ++j;
    f.motzkin.push_back(slice(segment_start, run_start));
    f.ascents.push_back(static_cast<int>(j - i + 1));
    segment_start = unmatched[j] + 1;
    i = j + 1;
  }
  f.motzkin.push_back(slice(segment_start, len));
  return f;
}

std::vector<TernaryWord> gamma_blocks(int m, std::span<const int> ascents) {
  if (m < 2 || ascents.empty()) {
    throw Error(ErrorCode::InvalidArgument, "gamma blocks need m >= 2 and one ascent run");
  }
  const TernaryWord word = full_ascent_word(m + 1);
  const auto digits = word.digits();
  std::vector<int> lengths;
  lengths.push_back(m % 2 == 1 ? 1 : 2);
  lengths.push_back(m % 2 == 1 ? ascents[0] + 1 : ascents[0]);
  for (std::size_t j = 1; j < ascents.size(); ++j) lengths.push_back(ascents[j]);

  int total = 0;
  for (int len : lengths) total += len;
  if (total != m + 1) {
    throw std::logic_error("gamma blocks: run lengths do not add up to m - 1");
  }
  std::vector<TernaryWord> blocks;
  std::size_t pos = 0;
  for (int len : lengths) {
    blocks.emplace_back(std::vector<std::uint8_t>(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                                                  digits.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    pos += static_cast<std::size_t>(len);
  }
  return blocks;
}

TernaryWord psi(const ArcDiagram& diagram) {
  const MotzkinPrefix prefix = phi_left(diagram);
  TernaryWord word = tau(prefix.steps());
  switch (classify_psi_case(prefix)) {
    case PsiCase::EndsAtZero: word += repeat_digit(1, 1); return word;
    case PsiCase::EndsAtOne: word += repeat_digit(0, 1); return word;
    case PsiCase::FullAscent: return full_ascent_word(static_cast<int>(prefix.size()) + 1);
    case PsiCase::General: break;
  }
  const PrefixFactorization f = factorize_prefix(prefix);
  const std::vector<TernaryWord> gamma = gamma_blocks(prefix.final_height(), f.ascents);
  TernaryWord out;
  for (std::size_t b = 0; b < gamma.size(); ++b) {
    out += tau(f.motzkin[b]);
    out += gamma[b];
  }
  out += tau(f.motzkin.back());
  return out;
}

std::vector<TernaryWord> enumerate_ternary(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "T_n needs n >= 1");
  std::vector<TernaryWord> out;
  std::vector<std::uint8_t> digits;
  ternary_words(n, 0, n, digits, out);
  return out;
}

// --- even/odd merge ------------------------------------------------------------

ArcDiagram merge_even(const ArcDiagram& diagram) {
  const int n = diagram.node_count();
  if (n % 2 != 0 || n < 2) {
    throw Error(ErrorCode::WrongParity,
                "expected a positive even number of nodes, got " + std::to_string(n));
  }
  require_motzkin_diagram(diagram);
  require_symmetric(diagram);
  const int center = n / 2;  // nodes center and center + 1 merge
  auto move = [center](int node) { return node <= center ? node : node - 1; };
  std::vector<Arc> arcs;
  for (const Arc& arc : diagram.arcs()) arcs.push_back({move(arc.left), move(arc.right)});
  return ArcDiagram(n - 1, std::move(arcs));
}

ArcDiagram split_odd(const ArcDiagram& diagram) {
  require_symmetric_odd_motzkin(diagram);
  const int n = diagram.node_count();
  const int center = (n + 1) / 2;
  std::vector<Arc> arcs;
  for (const Arc& arc : diagram.arcs()) {
    const int left = arc.left < center ? arc.left : arc.left + 1;
    const int right = arc.right <= center ? arc.right : arc.right + 1;
    arcs.push_back({left, right});
  }
  return ArcDiagram(n + 1, std::move(arcs));
}

void for_each_motzkin_path(int steps, const std::function<void(const MotzkinPath&)>& visit) {
  if (steps < 0) throw Error(ErrorCode::InvalidArgument, "step count must be nonnegative");
  std::vector<Step> buffer;
  motzkin_paths(steps, 0, buffer, visit);
}

}  // namespace arcdiag
