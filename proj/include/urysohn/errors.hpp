#pragma once

#include <stdexcept>
#include <string>

namespace urysohn {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define URYSOHN_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

URYSOHN_DEFINE_ERROR(ParseError);
URYSOHN_DEFINE_ERROR(ParameterError);
URYSOHN_DEFINE_ERROR(MembershipError);
URYSOHN_DEFINE_ERROR(RangeError);
URYSOHN_DEFINE_ERROR(SubsetError);
URYSOHN_DEFINE_ERROR(NonterminationError);
URYSOHN_DEFINE_ERROR(NotAWalkError);
URYSOHN_DEFINE_ERROR(DisconnectedError);
URYSOHN_DEFINE_ERROR(EdgeExistsError);
URYSOHN_DEFINE_ERROR(NotMetricError);
URYSOHN_DEFINE_ERROR(HypothesisError);
URYSOHN_DEFINE_ERROR(MetricityError);
URYSOHN_DEFINE_ERROR(NotAnEmbeddingError);
URYSOHN_DEFINE_ERROR(BudgetError);
URYSOHN_DEFINE_ERROR(CheckFailedError);
URYSOHN_DEFINE_ERROR(CompletionError);
URYSOHN_DEFINE_ERROR(PartitionError);

#undef URYSOHN_DEFINE_ERROR

}  // namespace urysohn
