#pragma once

#include "sftc/backend.hpp"
#include "sftc/chunking.hpp"
#include "sftc/config.hpp"
#include "sftc/corpus.hpp"
#include "sftc/errors.hpp"
#include "sftc/hashing.hpp"
#include "sftc/metrics.hpp"
#include "sftc/pipeline.hpp"
#include "sftc/queue.hpp"
#include "sftc/ranking.hpp"
#include "sftc/stats.hpp"
#include "sftc/tokenize.hpp"
#include "sftc/unicode.hpp"
#include "sftc/utf8.hpp"
