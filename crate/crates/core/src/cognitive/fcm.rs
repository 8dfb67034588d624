use std::collections::HashMap;

/// Result of [`fcm_run`]; states are `0/1` vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FcmRun {
    pub trajectory: Vec<Vec<u8>>,
    /// Index in the trajectory where the repeated state first appeared.
    pub cycle_start: usize,
}

impl FcmRun {
    pub fn pattern(&self) -> &[Vec<u8>] {
        &self.trajectory[self.cycle_start..]
    }
}

/// Plain fuzzy cognitive map over integer weights: `s ← [s·W > 0]`, with
/// `clamp` forced to 1 after each step, until a state repeats.
pub fn fcm_run(weights: &[Vec<i64>], s0: &[u8], clamp: &[usize]) -> FcmRun {
    let n = weights.len();
    let clamped = |mut s: Vec<u8>| {
        for &i in clamp {
            s[i] = 1;
        }
        s
    };
    let mut trajectory = vec![clamped(s0.to_vec())];
    let mut seen = HashMap::from([(trajectory[0].clone(), 0)]);
    loop {
        let current = trajectory.last().expect("non-empty");
        let next: Vec<u8> = (0..n)
            .map(|j| {
                let sum: i64 = (0..n).map(|i| i64::from(current[i]) * weights[i][j]).sum();
                u8::from(sum > 0)
            })
            .collect();
        let next = clamped(next);
        if let Some(&cycle_start) = seen.get(&next) {
            return FcmRun { trajectory, cycle_start };
        }
        seen.insert(next.clone(), trajectory.len());
        trajectory.push(next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle() {
        let run = fcm_run(&[vec![0, 1], vec![1, 0]], &[1, 0], &[]);
        assert_eq!(run.pattern(), &[vec![1, 0], vec![0, 1]]);
        let clamped = fcm_run(&[vec![0, 1], vec![1, 0]], &[1, 0], &[0]);
        assert_eq!(clamped.pattern(), &[vec![1, 1]]);
    }
}
