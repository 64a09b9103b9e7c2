#include "argrev/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "argrev/corpus.hpp"

namespace argrev {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Lexicon Lexicon::parse(std::string_view content) {
  Lexicon lexicon;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(start, end - start);
    const bool last = end == content.size();
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos)
        throw ParseError(line_no, "expected CATEGORY<TAB>word,word,...");
      std::string_view category = trim(line.substr(0, tab));
      if (category.empty()) throw ParseError(line_no, "empty category name");
      if (std::find(lexicon.categories_.begin(), lexicon.categories_.end(),
                    category) != lexicon.categories_.end())
        throw ParseError(line_no,
                         "duplicate category: '" + std::string(category) + "'");
      const auto index = static_cast<std::uint32_t>(lexicon.categories_.size());
      lexicon.categories_.emplace_back(category);

      std::string_view words = line.substr(tab + 1);
      std::size_t w = 0;
      while (w <= words.size()) {
        std::size_t comma = words.find(',', w);
        if (comma == std::string_view::npos) comma = words.size();
        std::string_view word = trim(words.substr(w, comma - w));
        if (!word.empty()) {
          auto& slots = lexicon.word_to_categories_[std::string(word)];
          if (std::find(slots.begin(), slots.end(), index) == slots.end())
            slots.push_back(index);
        }
        if (comma == words.size()) break;
        w = comma + 1;
      }
    }
    if (last) break;
  }
  return lexicon;
}

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::span<const std::uint32_t> Lexicon::categories_of(std::string_view word) const {
  auto it = word_to_categories_.find(std::string(word));
  if (it == word_to_categories_.end()) return {};
  return it->second;
}

const Lexicon& Lexicon::builtin_emotion() {
  static const Lexicon instance = Lexicon::parse(
      "JOY\thappy,happiness,glad,delighted,delightful,joy,joyful,cheerful,"
      "wonderful,fantastic,great,enjoy,enjoyed,enjoyable,pleasant,fun,loved\n"
      "SATISFACTION\tsatisfied,satisfying,satisfaction,content,contented,"
      "pleased,fulfilled,worthwhile,rewarding\n"
      "ADMIRATION\tadmire,admirable,impressive,impressed,brilliant,superb,"
      "masterful,outstanding,remarkable,excellent\n"
      "LOVE\tlove,loving,adore,adored,cherish,beloved,dear,fond\n"
      "INTEREST\tinteresting,interested,intriguing,fascinating,fascinated,"
      "curious,engaging,gripping,compelling,absorbing\n"
      "HOPE\thope,hopeful,hoping,optimistic,promising,anticipate,anticipated\n"
      "SURPRISE\tsurprise,surprised,surprising,unexpected,astonishing,"
      "astonished,startling,stunned\n"
      "RELIEF\trelief,relieved,reassured,reassuring,comforting,comforted\n"
      "ANGER\tangry,anger,furious,outraged,outrage,irritated,irritating,"
      "annoyed,annoying,infuriating,mad\n"
      "DISAPPOINTMENT\tdisappointed,disappointing,disappointment,letdown,"
      "underwhelming,underwhelmed,lackluster,mediocre\n"
      "DISGUST\tdisgusting,disgusted,awful,terrible,horrible,revolting,"
      "appalling,dreadful,gross,vile\n"
      "SADNESS\tsad,sadness,unhappy,depressing,depressed,miserable,gloomy,"
      "sorrow,mournful\n"
      "FEAR\tafraid,fear,scared,frightening,frightened,terrifying,terrified,"
      "worrying,worried,anxious,alarming\n"
      "CONTEMPT\tcontempt,pathetic,ridiculous,laughable,worthless,useless,"
      "pointless,absurd\n"
      "BOREDOM\tboring,bored,dull,tedious,tiresome,monotonous,bland,"
      "uninspired,forgettable\n"
      "FRUSTRATION\tfrustrating,frustrated,frustration,exasperating,"
      "maddening,confusing,confused\n"
      "GRATITUDE\tgrateful,thankful,thanks,thank,appreciative,appreciated\n"
      "PRIDE\tproud,pride,accomplished,triumphant\n");
  return instance;
}

const Lexicon& Lexicon::builtin_semantic() {
  static const Lexicon instance = Lexicon::parse(
      "POSITIV\tgood,great,excellent,best,better,fine,superior,perfect,"
      "quality,valuable,helpful,useful,recommend,recommended,worth,solid,"
      "strong,clear,easy,effective,accurate,thorough,well\n"
      "NEGATIV\tbad,worst,worse,poor,weak,flawed,broken,useless,waste,"
      "wasted,wrong,error,errors,problem,problems,fail,failed,fails,lacking,"
      "shallow,misleading,inaccurate,difficult\n"
      "STRONG\tpowerful,strong,strength,force,forceful,dominant,intense,"
      "major,complete,comprehensive,thorough,definitive,authoritative\n"
      "WEAK\tweak,weakness,fragile,feeble,thin,minor,partial,incomplete,"
      "limited,superficial,vague\n"
      "ACTIVE\tread,reading,write,writing,work,works,working,use,used,using,"
      "build,building,learn,learning,apply,applied,study,studying,practice\n"
      "PASSIVE\twait,waiting,rest,resting,remain,remained,stay,stayed,"
      "receive,received,accept,accepted\n"
      "PLEASUR\tenjoy,enjoyed,enjoyable,pleasure,pleasing,delight,delighted,"
      "satisfying,satisfied,fun,entertaining\n"
      "PAIN\tpain,painful,suffer,suffered,suffering,hurt,struggle,struggled,"
      "struggling,tedious,exhausting\n"
      "OVRST\tall,always,every,everything,never,completely,totally,"
      "absolutely,entirely,definitely,certainly,must,essential\n"
      "UNDRST\tsome,sometimes,somewhat,perhaps,maybe,possibly,slightly,"
      "rather,fairly,almost,nearly,partly\n"
      "THINK\tthink,thinks,thought,believe,believes,consider,considered,"
      "assume,assumed,expect,expected,suppose,realize,understand,understood\n"
      "KNOW\tknow,knows,known,knowledge,fact,facts,evidence,proof,proven,"
      "information,detail,details,research,data\n"
      "CAUSAL\tbecause,since,therefore,thus,hence,consequently,cause,caused,"
      "causes,result,results,resulting,reason,reasons,due\n"
      "EVAL\tjudge,judged,rate,rated,rating,assess,assessed,evaluate,"
      "evaluated,review,reviewed,opinion,verdict,critique\n"
      "TIME\tnow,today,yesterday,tomorrow,soon,later,early,late,before,"
      "after,during,while,year,years,month,months,week,weeks,day,days\n"
      "QUAN\tmany,much,few,several,numerous,countless,page,pages,chapter,"
      "chapters,half,dozen,hundred,thousand,amount,number\n");
  return instance;
}

}  // namespace argrev
