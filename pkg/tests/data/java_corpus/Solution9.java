import java.util.
    List;
import java.util.ArrayList;

class Solution9 {
    private static final int LIMIT = 47;
    private int count, other;

    public static int solve0(int[] values, int n, int limit) {
        int total = 0;
        for (int i = 0; i < n; i++) {
            total += values[i] * 2;
        }
        long big = 100000L;
        total += (int) (big % 7);
        return total;
    }
    private static int compute(int x, int y, int z) {
        return x + y - z;
    }
}

class Helper9 {
    int value;
}
