//! Weak and strict integer compositions, generated in place.

/// All ways of writing `total` as an ordered sum of `parts` integers, each at
/// least `min_part`. Produced in lexicographically decreasing order.
pub(crate) struct Compositions {
    parts: Vec<i64>,
    min_part: i64,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Compositions {
    pub(crate) fn new(total: i64, parts: usize, min_part: i64) -> Self {
        let floor = (parts as i64).checked_mul(min_part);
        let feasible = match floor {
            Some(floor) if parts == 0 => total == 0 && floor == 0,
            Some(floor) => total >= floor,
            None => false,
        };
        if !feasible {
            return Self { parts: Vec::new(), min_part, state: State::Done };
        }
        let mut buf = vec![min_part; parts];
        if let Some(first) = buf.first_mut() {
            *first = total - (parts as i64 - 1) * min_part;
        }
        Self { parts: buf, min_part, state: State::Fresh }
    }

    pub(crate) fn next(&mut self) -> Option<&[i64]> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                return Some(&self.parts);
            }
            State::Running => {}
        }
        let n = self.parts.len();
        if n < 2 {
            self.state = State::Done;
            return None;
        }
        let min = self.min_part;
        let Some(j) = (0..n - 1).rev().find(|&j| self.parts[j] > min) else {
            self.state = State::Done;
            return None;
        };
        self.parts[j] -= 1;
        let excess: i64 = self.parts[j + 1..].iter().map(|&p| p - min).sum::<i64>() + 1;
        self.parts[j + 1] = min + excess;
        for p in &mut self.parts[j + 2..] {
            *p = min;
        }
        Some(&self.parts)
    }
}
