package org.example.p10;

import java.util.List;
import java.util.ArrayList;

public class Solution10
{
    private static final int LIMIT = 41;
    private int count;

    public static int solve0(int[] values_tmp, int n, int limit) {
        int total=0;
        int[] values = values_tmp;
        for (int i_tmp = 0; i_tmp < n; i_tmp++) {
            total += values[i_tmp] * 2;
        }
        switch(total % 3)
        {
            case 0:
                total++;
            case 1:
                total--;
                break;
            default:
                break;
        }
        total += compute(total, limit, n);
        try {
            total = Integer.parseInt("" + total);
        } catch (NumberFormatException ex) {
            total = 0;
        }
        return total;
    }

    private static int compute(int x, int y, int z) {
        return x + y - z;
    }
}
