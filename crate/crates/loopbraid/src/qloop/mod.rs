//! The quantum-loop-algebra side: the braid action on l-weights with
//! multiplicative q-shifts, the Hecke matrices over the rational function
//! field in q, and the truncated intertwining check against the Yangian
//! braid operators.

pub mod gtl;
pub mod hecke;
pub mod qfield;
pub mod weights;

pub use gtl::{gtl_intertwine_check, gtl_phi, GTLContext, GtlError, TSpanSeries};
pub use hecke::{q_hecke_model, q_verify, QHeckeModel, QHeckeReport};
pub use qfield::QField;
pub use weights::{
    hseries_of_weight, q_act_generator, q_act_hseries, q_act_word, solve_drinfeld_type,
    QRootMultiset, QWeightComponent, QWeightTuple,
};
