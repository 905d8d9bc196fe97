// Exception types raised by diagramkit.
//
// Every domain error derives from diagramkit::Error and reports a stable
// short name through name(); the command line front end prints that name on
// standard error.

#ifndef DIAGRAMKIT_ERROR_HPP_
#define DIAGRAMKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace diagramkit {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual std::string_view name() const noexcept = 0;
  };

#define DIAGRAMKIT_DEFINE_ERROR(Name)                          \
  class Name : public Error {                                  \
   public:                                                     \
    using Error::Error;                                        \
    [[nodiscard]] std::string_view name() const noexcept override { \
      return #Name;                                            \
    }                                                          \
  }

  // presentation
  DIAGRAMKIT_DEFINE_ERROR(EmptyWord);
  DIAGRAMKIT_DEFINE_ERROR(LetterOutOfRange);
  DIAGRAMKIT_DEFINE_ERROR(DuplicateRelation);
  DIAGRAMKIT_DEFINE_ERROR(TrivialRelation);
  DIAGRAMKIT_DEFINE_ERROR(RelationOutOfRange);
  DIAGRAMKIT_DEFINE_ERROR(OffsetOutOfRange);
  DIAGRAMKIT_DEFINE_ERROR(SubwordMismatch);

  // diagrams
  DIAGRAMKIT_DEFINE_ERROR(BoundaryMismatch);
  DIAGRAMKIT_DEFINE_ERROR(PresentationMismatch);

  // braids and annular elements
  DIAGRAMKIT_DEFINE_ERROR(SlotOutOfRange);
  DIAGRAMKIT_DEFINE_ERROR(NotPure);
  DIAGRAMKIT_DEFINE_ERROR(WrongBaseWord);
  DIAGRAMKIT_DEFINE_ERROR(StrandCountMismatch);

  // complexes and homology
  DIAGRAMKIT_DEFINE_ERROR(VertexBudgetExceeded);
  DIAGRAMKIT_DEFINE_ERROR(DimensionOutOfRange);

  // text / JSON input
  DIAGRAMKIT_DEFINE_ERROR(ParseError);

#undef DIAGRAMKIT_DEFINE_ERROR

  // A cell of a diagram failed to apply to the running word.
  template <typename WordT>
  class BasicChainBreak : public Error {
   public:
    BasicChainBreak(std::size_t index, WordT running, std::string const& what)
        : Error(what), _index(index), _running(std::move(running)) {}

    [[nodiscard]] std::string_view name() const noexcept override {
      return "ChainBreak";
    }
    [[nodiscard]] std::size_t index() const noexcept {
      return _index;
    }
    [[nodiscard]] WordT const& running_word() const noexcept {
      return _running;
    }

   private:
    std::size_t _index;
    WordT       _running;
  };

}  // namespace diagramkit

#endif  // DIAGRAMKIT_ERROR_HPP_
