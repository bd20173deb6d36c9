#pragma once

#include <gtest/gtest.h>

#include "sgk/error.hpp"

// Expects `statement` to throw sgk::Error carrying `expected_code`.
#define EXPECT_SGK_ERROR(statement, expected_code)                                        \
  do {                                                                                    \
    try {                                                                                 \
      statement;                                                                          \
      ADD_FAILURE() << "expected " << sgk::error_name(sgk::ErrorCode::expected_code);     \
    } catch (const sgk::Error& sgk_error_) {                                              \
      EXPECT_EQ(sgk::error_name(sgk_error_.code()), sgk::error_name(sgk::ErrorCode::expected_code)) \
          << sgk_error_.what();                                                           \
    }                                                                                     \
  } while (false)
