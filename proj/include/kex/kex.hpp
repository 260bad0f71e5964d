#pragma once

#include "kex/centrality.hpp"
#include "kex/clustering.hpp"
#include "kex/coreness.hpp"
#include "kex/corpus.hpp"
#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/evaluate.hpp"
#include "kex/features.hpp"
#include "kex/format.hpp"
#include "kex/hulth.hpp"
#include "kex/logistic_regression.hpp"
#include "kex/metrics.hpp"
#include "kex/model.hpp"
#include "kex/naive_bayes.hpp"
#include "kex/pipeline.hpp"
#include "kex/porter.hpp"
#include "kex/pos.hpp"
#include "kex/rng.hpp"
#include "kex/smote.hpp"
#include "kex/stopwords.hpp"
#include "kex/text_graph.hpp"
#include "kex/textproc.hpp"
